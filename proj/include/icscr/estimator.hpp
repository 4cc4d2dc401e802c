// SPDX-License-Identifier: Apache-2.0
//
// Numerical GDOF extraction: regress achievable and bound rates against
// log2(rho) and compare the slopes to the closed form.

#pragma once

#include <span>
#include <vector>

#include "icscr/bounds.hpp"
#include "icscr/schemes.hpp"

namespace icscr {

struct SlopeReport {
    double alpha = 0.0;
    double beta = 0.0;
    std::vector<double> rho_list;
    std::vector<double> achieved_rates; // best achievable symmetric rate per rho
    std::vector<double> bound_rates;    // sum_rate_min / 2 per rho
    double achieved_slope = 0.0;
    double bound_slope = 0.0;
    double closed_form = 0.0;
    double residual = 0.0; // max |fit - data| over both regressions
};

// Ordinary least squares slope of (x, y); needs at least two points.
double ols_slope(std::span<const double> x, std::span<const double> y);

// For each rho, builds the channel from the exponents, evaluates the best
// achievable symmetric rate and half the minimum sum-rate bound, and fits
// both against log2(rho). The bound optimizer is warm-started with the
// previous rho's argmaxes and the scheme coefficients.
// rho_list must be strictly increasing with at least 4 entries > 1.
SlopeReport estimate_gdof(double alpha, double beta, std::span<const double> rho_list,
                          const OptimizerSettings& opt);

struct VerifyPointResult {
    SlopeReport report;
    double tol = 0.0;
    bool passed = false;
};

// Passes iff |achieved_slope - closed_form| <= tol and
// achieved_slope <= bound_slope + tol.
VerifyPointResult verify_point(double alpha, double beta, std::span<const double> rho_list,
                               double tol, const OptimizerSettings& opt);

} // namespace icscr
