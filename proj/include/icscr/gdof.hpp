// SPDX-License-Identifier: Apache-2.0
//
// Closed-form generalized degrees of freedom of the symmetric IC with a
// signal-cognitive relay: region classification over the (alpha, beta)
// quadrant, the piecewise value, exponent-form per-user upper bounds, and
// an audit of the alternative min-max rendering of the characterization.

#pragma once

#include <optional>
#include <vector>

namespace icscr {

// The nine regions of the (alpha, beta) plane. Conditions are closed
// inequalities; where several overlap (shared boundaries) classification
// picks the lowest index, and the value formulas agree there.
enum class Region : int {
    r1 = 1, // alpha >= 2 and beta <= 1                          d = 1
    r2,     // alpha <= beta <= 2 and alpha <= 1                 d = 1
    r3,     // max{1, 2 beta} <= alpha <= 2                      d = alpha/2
    r4,     // alpha >= max{1, beta}, beta >= min{alpha/2, 1}    d = beta
    r5,     // alpha <= beta <= 2 alpha and alpha >= 1           d = alpha
    r6,     // (beta+1)/2 <= alpha <= 2/3                        d = alpha
    r7,     // beta >= max{2, 2 alpha}                           d = beta/2
    r8,     // min{2a-1, a/2} <= beta <= alpha, alpha <= 1       d = 1+beta-alpha
    r9,     // max{2/3, 2 beta} <= alpha <= 1                    d = 1-alpha/2
};

constexpr int region_index(Region r) { return static_cast<int>(r); }

// Literal region condition and value formula, exposed for boundary checks.
bool region_condition(Region r, double alpha, double beta);
double region_value(Region r, double alpha, double beta);

Region classify(double alpha, double beta);
double gdof_value(double alpha, double beta);

// Per-user exponent-form upper bounds. single_user is always present; the
// others carry the strict applicability conditions of the finite-SNR sum
// rate bounds (mac_strong: alpha > max{1, beta}; mac_mixed: beta > alpha > 1;
// z_channel and weak_interference: alpha < 1).
struct GdofBoundSet {
    double single_user = 0.0;
    std::optional<double> mac_strong;
    std::optional<double> mac_mixed;
    std::optional<double> z_channel;
    std::optional<double> weak_interference;

    double min_bound() const;
};

GdofBoundSet gdof_upper_bounds(double alpha, double beta);

// The two-branch min-max rendering of the characterization, evaluated
// verbatim. Kept for auditing only: it disagrees with the region table on
// part of alpha <= 1 (see consistency_report); the region table is the
// canonical value.
double gdof_minmax_form(double alpha, double beta);

// Rectangular grid over the exponent plane. Points are alpha_at(i) =
// alpha_min + i * alpha_step for i in [0, alpha_count), likewise beta.
struct GridSpec {
    double alpha_min = 0.0;
    double alpha_max = 3.0;
    double alpha_step = 0.01;
    double beta_min = 0.0;
    double beta_max = 3.0;
    double beta_step = 0.01;

    int alpha_count() const;
    int beta_count() const;
    double alpha_at(int i) const { return alpha_min + i * alpha_step; }
    double beta_at(int j) const { return beta_min + j * beta_step; }
    bool valid() const;
};

struct Discrepancy {
    double alpha = 0.0;
    double beta = 0.0;
    double minmax_value = 0.0;
    double table_value = 0.0;
};

// Every grid point where the min-max form and the region table differ by
// more than tol, with both values.
std::vector<Discrepancy> consistency_report(const GridSpec& grid, double tol = 1e-9);

} // namespace icscr
