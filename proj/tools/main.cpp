// SPDX-License-Identifier: Apache-2.0
//
// icscr CLI: region/curve data emission, single-channel rate reports,
// slope estimation and batch verification.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "icscr/sweep.hpp"

namespace {

struct CliOptions {
    icscr::SweepConfig cfg;
    double h_d = 1.0, h_c = 1.0, h_r = 0.0, P = 1.0;
    double alpha = 0.0, beta = 0.0;
    std::string out;
    std::string format = "csv";
};

int write_output(const CliOptions& o, const std::string& text)
{
    if (o.out.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream f(o.out, std::ios::binary);
    if (!f) {
        std::cerr << "error: cannot open output file " << o.out << "\n";
        return 2;
    }
    f << text;
    return f.good() ? 0 : 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{
        "GDOF analysis of the symmetric interference channel with a signal-cognitive relay"};
    app.require_subcommand(1);
    app.set_config("--config", "", "Flat key=value config file; flags override it");

    CliOptions o;

    // Shared flags live on the parent so a flat config file mirrors them;
    // subcommands fall through to reach them.
    app.add_option("--alpha-min", o.cfg.grid.alpha_min, "Grid start for alpha");
    app.add_option("--alpha-max", o.cfg.grid.alpha_max, "Grid end for alpha");
    app.add_option("--alpha-step", o.cfg.grid.alpha_step, "Grid step for alpha");
    app.add_option("--beta-min", o.cfg.grid.beta_min, "Grid start for beta");
    app.add_option("--beta-max", o.cfg.grid.beta_max, "Grid end for beta");
    app.add_option("--beta-step", o.cfg.grid.beta_step, "Grid step for beta");
    app.add_option("--beta-list", o.cfg.beta_list, "Comma-separated beta values (curve)")
        ->delimiter(',');
    app.add_option("--rho-list", o.cfg.rho_list, "Comma-separated SNR anchors, rho > 1")
        ->delimiter(',');
    app.add_option("--tol", o.cfg.tol, "Slope tolerance");
    app.add_option("--grid-step", o.cfg.opt.grid_step, "Optimizer grid step (<= 0.05)");
    app.add_option("--threads", o.cfg.threads, "Worker threads for sweeps");
    app.add_option("--out", o.out, "Output path (default: stdout)");
    app.add_option("--format", o.format, "csv or json (regions, curve)")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* regions =
        app.add_subcommand("regions", "Emit the region map over the exponent grid");
    regions->fallthrough(true);

    CLI::App* curve = app.add_subcommand("curve", "Emit d(alpha) curves for fixed beta values");
    curve->fallthrough(true);

    CLI::App* rates =
        app.add_subcommand("rates", "Scheme rates and sum-rate bounds of one channel");
    rates->fallthrough(true);
    rates->add_option("h_d", o.h_d, "Direct gain")->required();
    rates->add_option("h_c", o.h_c, "Cross gain")->required();
    rates->add_option("h_r", o.h_r, "Relay gain")->required();
    rates->add_option("P", o.P, "Power budget")->required();

    CLI::App* verify = app.add_subcommand("verify", "Run the grid invariants and slope checks");
    verify->fallthrough(true);

    CLI::App* slope = app.add_subcommand("slope", "Estimate the GDOF slope at one exponent point");
    slope->fallthrough(true);
    slope->add_option("alpha", o.alpha, "Cross-link exponent")->required();
    slope->add_option("beta", o.beta, "Relay-link exponent")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*regions) {
            if (o.format == "json")
                return write_output(o, icscr::regions_json(o.cfg).dump(2) + "\n");
            std::ostringstream ss;
            icscr::write_regions_csv(o.cfg, ss);
            return write_output(o, ss.str());
        }
        if (*curve) {
            if (o.format == "json")
                return write_output(o, icscr::curve_json(o.cfg).dump(2) + "\n");
            std::ostringstream ss;
            icscr::write_curve_csv(o.cfg, ss);
            return write_output(o, ss.str());
        }
        if (*rates) {
            const auto p = icscr::make_channel(o.h_d, o.h_c, o.h_r, o.P);
            return write_output(o, icscr::rates_report(p, o.cfg.opt).dump(2) + "\n");
        }
        if (*slope) {
            const auto rhos = o.cfg.rho_list.empty() ? icscr::default_rho_list() : o.cfg.rho_list;
            const auto r = icscr::verify_point(o.alpha, o.beta, rhos, o.cfg.tol, o.cfg.opt);
            return write_output(o, icscr::slope_report_json(r).dump(2) + "\n");
        }
        if (*verify) {
            const auto summary = icscr::run_verify(o.cfg);
            const int rc = write_output(o, summary.details.dump(2) + "\n");
            if (rc != 0)
                return rc;
            return summary.passed ? 0 : 1;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
