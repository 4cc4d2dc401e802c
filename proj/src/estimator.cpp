// SPDX-License-Identifier: Apache-2.0

#include "icscr/estimator.hpp"

#include <cmath>
#include <stdexcept>

#include "icscr/gdof.hpp"

namespace icscr {

double ols_slope(std::span<const double> x, std::span<const double> y)
{
    if (x.size() != y.size() || x.size() < 2)
        throw std::invalid_argument("ols_slope needs two equally sized samples");
    const double n = static_cast<double>(x.size());
    double mx = 0.0, my = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0, sxy = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        sxx += (x[k] - mx) * (x[k] - mx);
        sxy += (x[k] - mx) * (y[k] - my);
    }
    if (sxx == 0.0)
        throw std::invalid_argument("ols_slope needs non-constant x");
    return sxy / sxx;
}

namespace {

void check_rho_list(std::span<const double> rho_list)
{
    if (rho_list.size() < 4)
        throw std::invalid_argument("rho_list needs at least 4 entries");
    double prev = 1.0;
    for (const double r : rho_list) {
        if (!(r > prev))
            throw std::invalid_argument("rho_list must be strictly increasing with entries > 1");
        prev = r;
    }
}

double max_fit_residual(std::span<const double> x, std::span<const double> y, double slope)
{
    // intercept of the least-squares line
    double mx = 0.0, my = 0.0;
    for (size_t k = 0; k < x.size(); ++k) {
        mx += x[k];
        my += y[k];
    }
    mx /= static_cast<double>(x.size());
    my /= static_cast<double>(x.size());
    const double c = my - slope * mx;
    double res = 0.0;
    for (size_t k = 0; k < x.size(); ++k)
        res = std::max(res, std::fabs(y[k] - (slope * x[k] + c)));
    return res;
}

void append_argmaxes(const BoundReport& rep, std::vector<RelayCoefficients>& seeds)
{
    for (const auto& t : {rep.mac_strong, rep.mac_mixed, rep.z_channel, rep.weak_interference})
        if (t)
            seeds.push_back(t->argmax);
}

} // namespace

SlopeReport estimate_gdof(double alpha, double beta, std::span<const double> rho_list,
                          const OptimizerSettings& opt)
{
    check_rho_list(rho_list);
    validate(opt);

    SlopeReport rep;
    rep.alpha = alpha;
    rep.beta = beta;
    rep.rho_list.assign(rho_list.begin(), rho_list.end());
    rep.closed_form = gdof_value(alpha, beta);

    std::vector<double> logs;
    logs.reserve(rho_list.size());
    OptimizerSettings per_rho = opt;
    for (const double rho : rho_list) {
        const ChannelParams p = gains_from_exponents({alpha, beta, rho});
        const SchemeResult best = best_achievable(p, opt);
        per_rho.seed_points.push_back(best.coeffs);
        const BoundReport bounds = sum_rate_upper_bound(p, per_rho);

        logs.push_back(std::log2(rho));
        rep.achieved_rates.push_back(best.sym_rate);
        rep.bound_rates.push_back(0.5 * bounds.sum_rate_min);

        // warm start for the next rho
        per_rho.seed_points = opt.seed_points;
        per_rho.seed_points.push_back(best.coeffs);
        append_argmaxes(bounds, per_rho.seed_points);
    }

    rep.achieved_slope = ols_slope(logs, rep.achieved_rates);
    rep.bound_slope = ols_slope(logs, rep.bound_rates);
    rep.residual = std::max(max_fit_residual(logs, rep.achieved_rates, rep.achieved_slope),
                            max_fit_residual(logs, rep.bound_rates, rep.bound_slope));
    return rep;
}

VerifyPointResult verify_point(double alpha, double beta, std::span<const double> rho_list,
                               double tol, const OptimizerSettings& opt)
{
    if (!(tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    VerifyPointResult out;
    out.report = estimate_gdof(alpha, beta, rho_list, opt);
    out.tol = tol;
    out.passed = std::fabs(out.report.achieved_slope - out.report.closed_form) <= tol &&
                 out.report.achieved_slope <= out.report.bound_slope + tol;
    return out;
}

} // namespace icscr
