// SPDX-License-Identifier: Apache-2.0
//
// Achievable transmission schemes for the symmetric IC with a
// signal-cognitive relay: finite-SNR symmetric rates for the five schemes,
// their closed-form exponent values, and a best-scheme selector.

#pragma once

#include <optional>

#include "icscr/bounds.hpp"
#include "icscr/channel.hpp"

namespace icscr {

enum class SchemeId : int {
    vsi = 0,   // decode the interference first, then the own signal
    zf_relay,  // relay cancels both cross links
    zf_source, // sources rescale so the relay cancels both cross links
    mac,       // both receivers jointly decode both signals
    hk,        // common/private superposition with private power at noise level
};

const char* scheme_name(SchemeId id);

// Signal split of the superposition scheme: received own/cross powers S
// and I, the common/private power split, and the raw (a, b) scalings.
struct HkSplit {
    double s = 0.0;
    double i = 0.0;
    double p_w = 0.0;
    double p_u = 0.0;
    double a = 0.0;
    double b = 0.0;
};

struct SchemeResult {
    SchemeId scheme = SchemeId::mac;
    bool applicable = false;
    double sym_rate = 0.0;
    double sum_rate = 0.0; // always 2 * sym_rate, symmetric operation
    RelayCoefficients coeffs;
    std::optional<HkSplit> hk;
    // Closed-form exponent value; filled by callers that know (alpha, beta).
    std::optional<double> gdof_formula;
};

// Very strong interference: applicable when the cross link supports
// decoding the interfering codeword ahead of the own signal at full rate,
// (h_c+h_r)^2 P >= (h_d+h_r)^2 P + (h_d+h_r)^4 P^2 / 2.
SchemeResult vsi_rate(const ChannelParams& p);

// Relay transmits -(h_c/h_r)(x1 + x2); needs h_c <= h_r.
SchemeResult zf_relay_cancels(const ChannelParams& p);

// Sources scale by -(h_r/h_c), relay forwards x1 + x2; needs h_c >= h_r.
// Throws std::invalid_argument when h_c = 0.
SchemeResult zf_source_scaled(const ChannelParams& p);

// Joint decoding of both signals at both receivers; always applicable.
SchemeResult mac_scheme(const ChannelParams& p);

// Superposition rate for fixed scalings |a| <= 1, b^2 <= 1. The private
// power is set so the cross-received private signal sits at the noise
// level; when that would exceed P/2, it is capped at P/2 with no common
// message and interference treated as noise.
SchemeResult hk_rate(const ChannelParams& p, double a, double b);

// Maximizes hk_rate over a 2-D grid in (a, b), always seeded with (1, 0)
// and, when h_r <= h_c, with the interference-nulling point (-h_r/h_c, 1).
SchemeResult hk_optimize(const ChannelParams& p, const OptimizerSettings& opt);

// Applicable scheme with the largest symmetric rate; ties go to the
// earliest SchemeId.
SchemeResult best_achievable(const ChannelParams& p, const OptimizerSettings& opt);

// Closed-form exponent value of a scheme where its applicability condition
// holds; absent otherwise.
std::optional<double> scheme_gdof(SchemeId scheme, double alpha, double beta);

} // namespace icscr
