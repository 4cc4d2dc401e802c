// SPDX-License-Identifier: Apache-2.0

#include "icscr/schemes.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icscr {

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

// Below this received interference power the split degenerates to a single
// interference-free stream (the rate formulas divide by I).
constexpr double kInterferenceEps = 1e-12;

SchemeResult inapplicable(SchemeId id)
{
    SchemeResult r;
    r.scheme = id;
    r.applicable = false;
    r.sym_rate = 0.0;
    r.sum_rate = 0.0;
    return r;
}

SchemeResult applicable(SchemeId id, double sym, const RelayCoefficients& c)
{
    SchemeResult r;
    r.scheme = id;
    r.applicable = true;
    r.sym_rate = sym;
    r.sum_rate = 2.0 * sym;
    r.coeffs = c;
    return r;
}

} // namespace

const char* scheme_name(SchemeId id)
{
    switch (id) {
    case SchemeId::vsi: return "VSI";
    case SchemeId::zf_relay: return "ZF_RELAY";
    case SchemeId::zf_source: return "ZF_SOURCE";
    case SchemeId::mac: return "MAC";
    case SchemeId::hk: return "HK";
    }
    return "?";
}

SchemeResult vsi_rate(const ChannelParams& p)
{
    validate(p);
    const double gd = p.h_d + p.h_r;
    const double gc = p.h_c + p.h_r;
    const bool ok = gc * gc * p.P >= gd * gd * p.P + gd * gd * gd * gd * p.P * p.P / 2.0;
    if (!ok)
        return inapplicable(SchemeId::vsi);
    RelayCoefficients c{kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2};
    return applicable(SchemeId::vsi, capacity_c(gd * gd * p.P / 2.0), c);
}

SchemeResult zf_relay_cancels(const ChannelParams& p)
{
    validate(p);
    if (p.h_c > p.h_r)
        return inapplicable(SchemeId::zf_relay);
    const double diff = p.h_d - p.h_c;
    // x_r = -(h_c/h_r)(x1 + x2) with per-source power P/2; the relay power
    // is (h_c/h_r)^2 P <= P exactly under h_c <= h_r.
    const double ratio = p.h_r > 0.0 ? p.h_c / p.h_r : 0.0;
    RelayCoefficients c{kInvSqrt2, kInvSqrt2, -kInvSqrt2 * ratio, -kInvSqrt2 * ratio};
    return applicable(SchemeId::zf_relay, capacity_c(diff * diff * p.P / 2.0), c);
}

SchemeResult zf_source_scaled(const ChannelParams& p)
{
    validate(p);
    if (p.h_c == 0.0)
        throw std::invalid_argument("zf_source_scaled needs h_c > 0");
    if (p.h_c < p.h_r)
        return inapplicable(SchemeId::zf_source);
    const double res = (p.h_d / p.h_c - 1.0) * p.h_r;
    RelayCoefficients c{-kInvSqrt2 * p.h_r / p.h_c, -kInvSqrt2 * p.h_r / p.h_c, kInvSqrt2,
                        kInvSqrt2};
    return applicable(SchemeId::zf_source, capacity_c(res * res * p.P / 2.0), c);
}

SchemeResult mac_scheme(const ChannelParams& p)
{
    validate(p);
    const double gd = p.h_d + p.h_r;
    const double gc = p.h_c + p.h_r;
    const double own = gd * gd * p.P / 2.0;
    const double cross = gc * gc * p.P / 2.0;
    // Joint decoding at each receiver: own-signal and cross-signal
    // single-rate constraints plus half the sum constraint.
    const double sym = std::min({capacity_c(own), capacity_c(cross),
                                 0.5 * capacity_c(own + cross)});
    RelayCoefficients c{kInvSqrt2, kInvSqrt2, kInvSqrt2, kInvSqrt2};
    return applicable(SchemeId::mac, sym, c);
}

SchemeResult hk_rate(const ChannelParams& p, double a, double b)
{
    validate(p);
    if (!(a * a <= 1.0 + 1e-12) || !(b * b <= 1.0 + 1e-12))
        throw std::invalid_argument("hk_rate needs |a| <= 1 and b^2 <= 1");

    const double g_own = a * p.h_d + b * p.h_r;
    const double g_cross = a * p.h_c + b * p.h_r;
    const double s = g_own * g_own * p.P / 2.0;
    const double i = g_cross * g_cross * p.P / 2.0;

    HkSplit split;
    split.a = a;
    split.b = b;
    split.s = s;
    split.i = i;

    double sym = 0.0;
    if (i <= kInterferenceEps) {
        // Interference nulled: a single private stream at power P/2.
        split.p_u = p.P / 2.0;
        split.p_w = 0.0;
        sym = capacity_c(s);
    } else if (i < 1.0) {
        // Noise-level private power would exceed P/2; cap it there, send no
        // common message and treat the residual interference as noise.
        split.p_u = p.P / 2.0;
        split.p_w = 0.0;
        sym = capacity_c(s / (1.0 + 2.0 * i));
    } else {
        // Private power puts the cross-received private signal at the noise
        // level. The common pair is decoded first as a two-user MAC over
        // stage-1 noise 2 + S/I, then the own private message is decoded
        // with the other private signal as noise.
        split.p_u = p.P / (2.0 * i);
        split.p_w = p.P / 2.0 - split.p_u;
        const double denom = s + 2.0 * i;
        const double common = std::min({0.5 * capacity_c((i - 1.0) * (s + i) / denom),
                                        capacity_c(i * (i - 1.0) / denom),
                                        capacity_c(s * (i - 1.0) / denom)});
        sym = common + capacity_c(s / (2.0 * i));
    }

    RelayCoefficients c{a * kInvSqrt2, a * kInvSqrt2, b * kInvSqrt2, b * kInvSqrt2};
    SchemeResult r = applicable(SchemeId::hk, std::max(0.0, sym), c);
    r.hk = split;
    return r;
}

SchemeResult hk_optimize(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);

    SearchDomain d;
    d.use_a1 = true;          // a
    d.use_b = true;           // b mapped onto b1, b2 pinned to 0
    d.grid_b1 = {0.0, 1.0};   // (a, b) -> (-a, -b) leaves S and I unchanged
    d.grid_b2 = {0.0, 0.0};

    OptimizerSettings o = opt;
    o.seed_points.clear();
    o.seed_points.push_back({1.0, 1.0, 0.0, 0.0});
    if (p.h_c > 0.0 && p.h_r <= p.h_c)
        o.seed_points.push_back({-p.h_r / p.h_c, 1.0, 1.0, 0.0});

    const MaxResult best = maximize(
        [&p](const RelayCoefficients& c) { return hk_rate(p, c.a1, c.b1).sym_rate; }, d, o);
    return hk_rate(p, best.argmax.a1, best.argmax.b1);
}

SchemeResult best_achievable(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    SchemeResult results[5] = {
        vsi_rate(p),
        zf_relay_cancels(p),
        p.h_c > 0.0 ? zf_source_scaled(p) : inapplicable(SchemeId::zf_source),
        mac_scheme(p),
        hk_optimize(p, opt),
    };
    const SchemeResult* best = nullptr;
    for (const auto& r : results) {
        if (!r.applicable)
            continue;
        if (best == nullptr || r.sym_rate > best->sym_rate)
            best = &r;
    }
    return *best; // mac_scheme is always applicable
}

std::optional<double> scheme_gdof(SchemeId scheme, double alpha, double beta)
{
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("exponents must be nonnegative");
    switch (scheme) {
    case SchemeId::vsi:
        if (alpha >= std::max(2.0, 2.0 * beta))
            return std::max(1.0, beta);
        return std::nullopt;
    case SchemeId::zf_relay:
        if (alpha <= beta)
            return std::max(1.0, alpha);
        return std::nullopt;
    case SchemeId::zf_source:
        if (alpha >= beta)
            return std::max(1.0 + beta - alpha, beta);
        return std::nullopt;
    case SchemeId::mac:
        // Joint decoding carries the per-receiver single-rate constraints
        // alongside the sum constraint.
        return std::min({std::max(1.0, beta), std::max(alpha, beta),
                         0.5 * std::max({1.0, alpha, beta})});
    case SchemeId::hk:
        if (beta <= alpha && alpha <= 1.0)
            return std::min(std::max(1.0 - 0.5 * alpha, 1.0 + beta - alpha),
                            std::max(alpha, 1.0 + beta - alpha));
        return std::nullopt;
    }
    return std::nullopt;
}

} // namespace icscr
