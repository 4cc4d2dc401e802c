// SPDX-License-Identifier: Apache-2.0

#include "icscr/channel.hpp"

#include <cmath>

namespace icscr {

void validate(const ChannelParams& p)
{
    if (!(p.h_d >= 0.0) || !(p.h_c >= 0.0) || !(p.h_r >= 0.0))
        throw std::invalid_argument("channel gains must be nonnegative");
    if (!(p.P > 0.0))
        throw std::invalid_argument("power budget P must be positive");
}

ChannelParams make_channel(double h_d, double h_c, double h_r, double P)
{
    ChannelParams p{h_d, h_c, h_r, P};
    validate(p);
    return p;
}

bool coefficients_feasible(const RelayCoefficients& c, double tol)
{
    return c.a1 * c.a1 <= 1.0 + tol && c.a2 * c.a2 <= 1.0 + tol &&
           c.b1 * c.b1 + c.b2 * c.b2 <= 1.0 + tol;
}

ChannelParams gains_from_exponents(const GdofPoint& point)
{
    if (!(point.rho > 1.0))
        throw std::invalid_argument("rho must exceed 1");
    if (!(point.alpha >= 0.0) || !(point.beta >= 0.0))
        throw std::invalid_argument("exponents must be nonnegative");
    ChannelParams p;
    p.P = 1.0;
    // All three via pow so equal exponents give bitwise equal gains and the
    // strict bound-regime conditions see exact equality at alpha or beta = 1.
    p.h_d = std::pow(point.rho, 0.5);
    p.h_c = std::pow(point.rho, 0.5 * point.alpha);
    p.h_r = std::pow(point.rho, 0.5 * point.beta);
    return p;
}

GdofPoint exponents_from_gains(const ChannelParams& params, double rho)
{
    validate(params);
    if (!(rho > 1.0))
        throw std::invalid_argument("rho must exceed 1");
    if (!(params.h_c > 0.0) || !(params.h_r > 0.0) || !(params.h_d > 0.0))
        throw std::invalid_argument("exponent extraction needs strictly positive gains");
    const double log_rho = std::log(rho);
    const double log_p = std::log(params.P);
    GdofPoint pt;
    pt.rho = rho;
    pt.alpha = (2.0 * std::log(params.h_c) + log_p) / log_rho;
    pt.beta = (2.0 * std::log(params.h_r) + log_p) / log_rho;
    return pt;
}

EffectiveGains effective_gains(const ChannelParams& params, const RelayCoefficients& coeffs)
{
    validate(params);
    if (coeffs.a1 == 0.0 || coeffs.a2 == 0.0)
        throw std::invalid_argument("effective gains need a1 != 0 and a2 != 0");
    const double r1 = coeffs.b1 / coeffs.a1;
    const double r2 = coeffs.b2 / coeffs.a2;
    EffectiveGains g;
    g.g11 = params.h_d + r1 * params.h_r;
    g.g12 = params.h_c + r2 * params.h_r;
    g.g21 = params.h_c + r1 * params.h_r;
    g.g22 = params.h_d + r2 * params.h_r;
    return g;
}

} // namespace icscr
