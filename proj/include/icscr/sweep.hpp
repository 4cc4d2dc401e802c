// SPDX-License-Identifier: Apache-2.0
//
// Command-level operations behind the CLI: figure-data emission,
// single-channel rate reports, slope reports and the batch verifier.

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

#include "icscr/estimator.hpp"
#include "icscr/gdof.hpp"

namespace icscr {

using json = nlohmann::ordered_json;

struct SweepConfig {
    GridSpec grid;
    std::vector<double> beta_list = {0.0, 0.25, 0.5, 0.75, 1.0};
    std::vector<double> rho_list; // empty means default_rho_list()
    double tol = 0.05;
    OptimizerSettings opt;
    int threads = 1;
};

// Geometric rho grid, 8 points from 2^24 to 2^48.
std::vector<double> default_rho_list();

// Representative exponent point inside each of the nine regions, used by
// the slope checks.
const std::vector<std::pair<double, double>>& region_representatives();

// Throws std::invalid_argument on empty ranges or nonpositive steps.
void validate(const SweepConfig& cfg);

// Value formatted with 12 significant digits, C locale.
std::string format_sig(double v);

// CSV "alpha,beta,region,d", alpha-major row order, deterministic bytes.
void write_regions_csv(const SweepConfig& cfg, std::ostream& os);
json regions_json(const SweepConfig& cfg);

// CSV "alpha,beta,d", one curve per beta in beta_list.
void write_curve_csv(const SweepConfig& cfg, std::ostream& os);
json curve_json(const SweepConfig& cfg);

// All five schemes, the bound report and the achievability margin.
json rates_report(const ChannelParams& p, const OptimizerSettings& opt);

json slope_report_json(const VerifyPointResult& r);

struct VerifySummary {
    bool passed = false;
    json details;
};

// Grid invariants (coverage, boundary agreement, continuity, monotonicity,
// scheme/closed-form agreement, exponent-level bound soundness), slope
// sandwich at the region representatives, and the informational min-max
// discrepancy audit.
VerifySummary run_verify(const SweepConfig& cfg);

} // namespace icscr
