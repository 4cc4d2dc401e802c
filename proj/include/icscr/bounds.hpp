// SPDX-License-Identifier: Apache-2.0
//
// Finite-SNR sum-rate upper bounds for the symmetric IC with a
// signal-cognitive relay, including the constrained maximizations over the
// source/relay scalings, and the deterministic grid + refinement optimizer
// behind them.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "icscr/channel.hpp"

namespace icscr {

// Shannon rate of a real SNR, log2(1 + x), in bits per channel use.
double capacity_c(double x);

// Optimizer knobs. The grid is uniform with spacing grid_step over the
// scalar coordinates and an arc-length-uniform polar grid of the same
// spacing over the (b1, b2) disk. Local refinement runs from the best
// multistart_count grid cells and from every seed point.
struct OptimizerSettings {
    double grid_step = 0.02;           // must be in (0, 0.05]
    int refinement_iterations = 80;    // compass-search sweeps per start
    int multistart_count = 16;         // refined grid cells
    std::vector<RelayCoefficients> seed_points;
};

void validate(const OptimizerSettings& opt);

// Received-power expressions appearing in the sum-rate bounds. All take
// the physical channel plus the scalings that actually enter them.
namespace snr {

// MAC at receiver 1 when source 1 is zero-forced (a1 = -b1 h_r / h_c, a2 = 1).
double zf_mac(const ChannelParams& p, double b1, double b2);
// Joint-decoding sum SNRs at receivers 1 and 2 (a1 = a2 = 1).
double mac_sum_rx1(const ChannelParams& p, double b1, double b2);
double mac_sum_rx2(const ChannelParams& p, double b1, double b2);
// Direct link of user 1 as seen by its receiver.
double direct(const ChannelParams& p, double a1, double b1);
// Second user's SNR in the Z-channel argument, interference present
// (a2 = 1) or with the second cross link nulled.
double z_second_user(const ChannelParams& p, double a1, double b1, double b2);
double z_second_user_nulled(const ChannelParams& p, double a1, double b1, double b2);
// Genie-aided per-receiver SNRs of the weak-interference argument.
double genie_rx1(const ChannelParams& p, const RelayCoefficients& c);
double genie_rx2(const ChannelParams& p, const RelayCoefficients& c);

} // namespace snr

// Search domain for maximize(). Active coordinates range over the true
// feasible set (|a_j| <= 1, b1^2 + b2^2 <= 1); the grid may additionally be
// folded into a sub-box when the objective is symmetric under sign flips.
// Inactive coordinates stay at their fixed values.
struct Interval {
    double lo = -1.0;
    double hi = 1.0;
};

struct SearchDomain {
    bool use_a1 = false;
    bool use_a2 = false;
    bool use_b = false;
    Interval grid_a1{-1.0, 1.0};
    Interval grid_a2{-1.0, 1.0};
    Interval grid_b1{-1.0, 1.0};
    Interval grid_b2{-1.0, 1.0};
    double fixed_a1 = 1.0;
    double fixed_a2 = 1.0;
    double fixed_b1 = 0.0;
    double fixed_b2 = 0.0;
    // Optional extra feasibility constraint (e.g. the zero-forcing margin).
    std::function<bool(const RelayCoefficients&)> feasible;
};

struct MaxResult {
    double value = 0.0;
    RelayCoefficients argmax;
};

// Deterministic maximization: coarse grid, then compass-search refinement
// from the best cells and all seeds. The returned value dominates the
// objective at every grid point and every feasible seed. Ties are broken
// by the lexicographically smallest (a1, a2, b1, b2).
// Throws std::domain_error when the feasible set is empty.
MaxResult maximize(const std::function<double(const RelayCoefficients&)>& objective,
                   const SearchDomain& domain, const OptimizerSettings& opt);

// One optimized sum-rate bound: its value in bits per channel use, the
// maximizing coefficients, and which internal branch attained it.
struct OptimizedValue {
    double value = 0.0;
    RelayCoefficients argmax;
    std::string branch;
};

struct BoundReport {
    double single_user_each = 0.0;
    std::optional<OptimizedValue> mac_strong;
    std::optional<OptimizedValue> mac_mixed;
    std::optional<OptimizedValue> z_channel;
    std::optional<OptimizedValue> weak_interference;
    double sum_rate_min = 0.0;
};

// Per-user cut-set style bound C((h_d + h_r)^2 P).
double single_user_bound(const ChannelParams& p);

// Sum-rate bounds; each throws std::domain_error outside its regime.
OptimizedValue mac_bound_strong(const ChannelParams& p, const OptimizerSettings& opt); // h_c > max{h_d, h_r}
OptimizedValue mac_bound_mixed(const ChannelParams& p, const OptimizerSettings& opt);  // h_r > h_c > h_d
OptimizedValue z_bound(const ChannelParams& p, const OptimizerSettings& opt);          // h_c < h_d
OptimizedValue weak_interference_bound(const ChannelParams& p, const OptimizerSettings& opt); // h_c < h_d

// Evaluates every applicable bound; sum_rate_min is the minimum of the
// present sum-rate bounds and twice the single-user bound.
BoundReport sum_rate_upper_bound(const ChannelParams& p, const OptimizerSettings& opt);

} // namespace icscr
