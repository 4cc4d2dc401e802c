// SPDX-License-Identifier: Apache-2.0
//
// Channel parameterization for the symmetric interference channel with a
// signal-cognitive relay: physical gains, exponent-space description, and
// the effective gains induced by source/relay scaling.

#pragma once

#include <stdexcept>

namespace icscr {

// Physical channel: direct, cross and relay gains plus the per-node power
// budget. Gains are nonnegative reals (only squared magnitudes enter any
// rate expression), P is strictly positive.
struct ChannelParams {
    double h_d = 1.0;
    double h_c = 0.0;
    double h_r = 0.0;
    double P = 1.0;
};

// Exponent-space point: rho is the SNR anchor h_d^2 P, alpha and beta are
// the cross- and relay-link exponents. rho must exceed 1 so that log(rho)
// is positive.
struct GdofPoint {
    double alpha = 0.0;
    double beta = 0.0;
    double rho = 0.0;
};

// Source amplitude scalings a1, a2 (squared values at most 1) and relay
// combining weights b1, b2 (b1^2 + b2^2 at most 1).
struct RelayCoefficients {
    double a1 = 1.0;
    double a2 = 1.0;
    double b1 = 0.0;
    double b2 = 0.0;
};

// Composite gains multiplying X1 and X2 at receivers 1 and 2. With the
// relay silent (b=0) these reduce to the plain interference-channel gains
// (h_d, h_c, h_c, h_d).
struct EffectiveGains {
    double g11 = 0.0; // X1 at receiver 1
    double g12 = 0.0; // X2 at receiver 1
    double g21 = 0.0; // X1 at receiver 2
    double g22 = 0.0; // X2 at receiver 2
};

// Slack for the relay power constraint b1^2 + b2^2 <= 1; canonical choices
// like b1 = b2 = 1/sqrt(2) round to 1 + 2^-52.
inline constexpr double kPowerTol = 1e-15;

void validate(const ChannelParams& p);
ChannelParams make_channel(double h_d, double h_c, double h_r, double P);

bool coefficients_feasible(const RelayCoefficients& c, double tol = kPowerTol);

// Builds the channel realizing a GdofPoint with the convention P = 1:
// h_d = rho^(1/2), h_c = rho^(alpha/2), h_r = rho^(beta/2).
// Throws std::invalid_argument for rho <= 1 or negative exponents.
ChannelParams gains_from_exponents(const GdofPoint& point);

// Inverse map: alpha = log(h_c^2 P)/log(rho), beta = log(h_r^2 P)/log(rho).
// Throws for rho <= 1 or zero gains.
GdofPoint exponents_from_gains(const ChannelParams& params, double rho);

// Effective gains of the cooperating system, g = h + (b_j/a_j) h_r per
// link. Requires a1 != 0 and a2 != 0.
EffectiveGains effective_gains(const ChannelParams& params, const RelayCoefficients& coeffs);

} // namespace icscr
