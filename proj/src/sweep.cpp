// SPDX-License-Identifier: Apache-2.0

#include "icscr/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "icscr/schemes.hpp"

namespace icscr {

std::vector<double> default_rho_list()
{
    std::vector<double> rhos;
    for (int k = 0; k < 8; ++k)
        rhos.push_back(std::exp2(24.0 + 24.0 * k / 7.0));
    return rhos;
}

const std::vector<std::pair<double, double>>& region_representatives()
{
    static const std::vector<std::pair<double, double>> pts = {
        {3.0, 0.5}, {0.5, 1.5}, {1.5, 0.25}, {1.5, 1.0}, {1.2, 1.5},
        {0.6, 0.1}, {1.0, 3.0}, {0.8, 0.5},  {0.9, 0.1},
    };
    return pts;
}

void validate(const SweepConfig& cfg)
{
    if (!cfg.grid.valid() || cfg.grid.alpha_count() < 1 || cfg.grid.beta_count() < 1)
        throw std::invalid_argument("invalid or empty alpha/beta grid");
    if (!(cfg.tol > 0.0))
        throw std::invalid_argument("tolerance must be positive");
    if (cfg.threads < 1)
        throw std::invalid_argument("threads must be at least 1");
    validate(cfg.opt);
}

std::string format_sig(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

namespace {

// Builds one string chunk per row index and streams them in order.
template <class RowFn>
void emit_rows(int rows, int threads, std::ostream& os, RowFn&& fn)
{
    if (threads <= 1) {
        for (int i = 0; i < rows; ++i)
            os << fn(i);
        return;
    }
    std::vector<std::string> chunks(static_cast<size_t>(rows));
    std::vector<std::thread> pool;
    const int t = std::min(threads, rows);
    for (int w = 0; w < t; ++w) {
        pool.emplace_back([&, w] {
            for (int i = w; i < rows; i += t)
                chunks[static_cast<size_t>(i)] = fn(i);
        });
    }
    for (auto& th : pool)
        th.join();
    for (const auto& c : chunks)
        os << c;
}

json coeffs_json(const RelayCoefficients& c)
{
    return json{{"a1", c.a1}, {"a2", c.a2}, {"b1", c.b1}, {"b2", c.b2}};
}

json scheme_json(const SchemeResult& r)
{
    json j{{"scheme", scheme_name(r.scheme)},
           {"applicable", r.applicable},
           {"sym_rate", r.sym_rate},
           {"sum_rate", r.sum_rate},
           {"coeffs", coeffs_json(r.coeffs)}};
    if (r.hk) {
        j["hk"] = json{{"S", r.hk->s},   {"I", r.hk->i}, {"P_w", r.hk->p_w},
                       {"P_u", r.hk->p_u}, {"a", r.hk->a}, {"b", r.hk->b}};
    }
    if (r.gdof_formula)
        j["gdof_formula"] = *r.gdof_formula;
    return j;
}

json bound_json(const OptimizedValue& v)
{
    return json{{"value", v.value}, {"branch", v.branch}, {"argmax", coeffs_json(v.argmax)}};
}

} // namespace

void write_regions_csv(const SweepConfig& cfg, std::ostream& os)
{
    validate(cfg);
    os << "alpha,beta,region,d\n";
    const int na = cfg.grid.alpha_count();
    const int nb = cfg.grid.beta_count();
    emit_rows(na, cfg.threads, os, [&cfg, nb](int i) {
        std::string chunk;
        const double a = cfg.grid.alpha_at(i);
        for (int j = 0; j < nb; ++j) {
            const double b = cfg.grid.beta_at(j);
            const Region r = classify(a, b);
            chunk += format_sig(a);
            chunk += ',';
            chunk += format_sig(b);
            chunk += ',';
            chunk += std::to_string(region_index(r));
            chunk += ',';
            chunk += format_sig(region_value(r, a, b));
            chunk += '\n';
        }
        return chunk;
    });
}

json regions_json(const SweepConfig& cfg)
{
    validate(cfg);
    json rows = json::array();
    for (int i = 0; i < cfg.grid.alpha_count(); ++i) {
        const double a = cfg.grid.alpha_at(i);
        for (int j = 0; j < cfg.grid.beta_count(); ++j) {
            const double b = cfg.grid.beta_at(j);
            const Region r = classify(a, b);
            rows.push_back(json{{"alpha", a},
                                {"beta", b},
                                {"region", region_index(r)},
                                {"d", region_value(r, a, b)}});
        }
    }
    return rows;
}

void write_curve_csv(const SweepConfig& cfg, std::ostream& os)
{
    validate(cfg);
    if (cfg.beta_list.empty())
        throw std::invalid_argument("curve needs a nonempty beta list");
    os << "alpha,beta,d\n";
    const int na = cfg.grid.alpha_count();
    for (const double b : cfg.beta_list) {
        if (!(b >= 0.0))
            throw std::invalid_argument("beta values must be nonnegative");
        emit_rows(na, cfg.threads, os, [&cfg, b](int i) {
            const double a = cfg.grid.alpha_at(i);
            std::string row = format_sig(a);
            row += ',';
            row += format_sig(b);
            row += ',';
            row += format_sig(gdof_value(a, b));
            row += '\n';
            return row;
        });
    }
}

json curve_json(const SweepConfig& cfg)
{
    validate(cfg);
    json rows = json::array();
    for (const double b : cfg.beta_list)
        for (int i = 0; i < cfg.grid.alpha_count(); ++i) {
            const double a = cfg.grid.alpha_at(i);
            rows.push_back(json{{"alpha", a}, {"beta", b}, {"d", gdof_value(a, b)}});
        }
    return rows;
}

json rates_report(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    const SchemeResult schemes[5] = {
        vsi_rate(p),
        zf_relay_cancels(p),
        p.h_c > 0.0 ? zf_source_scaled(p)
                    : SchemeResult{SchemeId::zf_source, false, 0.0, 0.0, {}, {}, {}},
        mac_scheme(p),
        hk_optimize(p, opt),
    };
    const SchemeResult best = best_achievable(p, opt);

    OptimizerSettings seeded = opt;
    for (const auto& s : schemes)
        if (s.applicable)
            seeded.seed_points.push_back(s.coeffs);
    const BoundReport bounds = sum_rate_upper_bound(p, seeded);

    json j;
    j["channel"] = json{{"h_d", p.h_d}, {"h_c", p.h_c}, {"h_r", p.h_r}, {"P", p.P}};
    json arr = json::array();
    for (const auto& s : schemes)
        arr.push_back(scheme_json(s));
    j["schemes"] = arr;
    j["best"] = scheme_json(best);
    json jb;
    jb["single_user_each"] = bounds.single_user_each;
    if (bounds.mac_strong)
        jb["mac_strong"] = bound_json(*bounds.mac_strong);
    if (bounds.mac_mixed)
        jb["mac_mixed"] = bound_json(*bounds.mac_mixed);
    if (bounds.z_channel)
        jb["z_channel"] = bound_json(*bounds.z_channel);
    if (bounds.weak_interference)
        jb["weak_interference"] = bound_json(*bounds.weak_interference);
    jb["sum_rate_min"] = bounds.sum_rate_min;
    j["bounds"] = jb;
    j["margin"] = bounds.sum_rate_min - best.sum_rate;
    return j;
}

json slope_report_json(const VerifyPointResult& r)
{
    json j;
    j["alpha"] = r.report.alpha;
    j["beta"] = r.report.beta;
    j["rho_list"] = r.report.rho_list;
    j["achieved_rates"] = r.report.achieved_rates;
    j["bound_rates"] = r.report.bound_rates;
    j["achieved_slope"] = r.report.achieved_slope;
    j["bound_slope"] = r.report.bound_slope;
    j["closed_form"] = r.report.closed_form;
    j["residual"] = r.report.residual;
    j["tol"] = r.tol;
    j["passed"] = r.passed;
    return j;
}

VerifySummary run_verify(const SweepConfig& cfg)
{
    validate(cfg);
    const GridSpec& g = cfg.grid;
    const int na = g.alpha_count();
    const int nb = g.beta_count();

    VerifySummary out;
    json checks = json::array();
    bool all_ok = true;
    const auto push_check = [&](const std::string& name, bool ok, const std::string& detail) {
        checks.push_back(json{{"name", name}, {"passed", ok}, {"detail", detail}});
        all_ok = all_ok && ok;
    };

    // one classification pass, cached for the difference checks
    std::vector<double> d(static_cast<size_t>(na) * nb);
    bool covered = true;
    {
        bool boundary_ok = true;
        bool scheme_ok = true;
        bool sound_ok = true;
        std::string detail;
        for (int i = 0; i < na && covered; ++i) {
            const double a = g.alpha_at(i);
            for (int j = 0; j < nb; ++j) {
                const double b = g.beta_at(j);
                double val = 0.0;
                bool any = false;
                for (int k = 1; k <= 9; ++k) {
                    const auto r = static_cast<Region>(k);
                    if (!region_condition(r, a, b))
                        continue;
                    const double v = region_value(r, a, b);
                    if (!any)
                        val = v;
                    else if (std::fabs(v - val) > 1e-12)
                        boundary_ok = false;
                    any = true;
                }
                if (!any) {
                    covered = false;
                    detail = "uncovered at alpha=" + format_sig(a) + " beta=" + format_sig(b);
                    break;
                }
                d[static_cast<size_t>(i) * nb + j] = val;

                double ach = 0.0;
                for (const SchemeId id : {SchemeId::vsi, SchemeId::zf_relay, SchemeId::zf_source,
                                          SchemeId::mac, SchemeId::hk})
                    if (const auto v = scheme_gdof(id, a, b))
                        ach = std::max(ach, *v);
                if (std::fabs(ach - val) > 1e-9)
                    scheme_ok = false;
                if (val > gdof_upper_bounds(a, b).min_bound() + 1e-12)
                    sound_ok = false;
            }
        }
        push_check("coverage", covered, covered ? std::to_string(na * nb) + " points" : detail);
        push_check("boundary_agreement", boundary_ok, "overlapping regions agree to 1e-12");
        push_check("scheme_agreement", scheme_ok, "max scheme exponent equals closed form to 1e-9");
        push_check("bound_soundness", sound_ok, "closed form below every applicable bound");
    }

    {
        const double lip_a = 2.0 * g.alpha_step + 1e-12;
        const double lip_b = 2.0 * g.beta_step + 1e-12;
        bool cont_ok = covered;
        bool mono_ok = covered;
        for (int i = 0; covered && i < na; ++i) {
            for (int j = 0; j < nb; ++j) {
                const double v = d[static_cast<size_t>(i) * nb + j];
                if (i + 1 < na &&
                    std::fabs(d[static_cast<size_t>(i + 1) * nb + j] - v) > lip_a)
                    cont_ok = false;
                if (j + 1 < nb) {
                    const double vn = d[static_cast<size_t>(i) * nb + j + 1];
                    if (std::fabs(vn - v) > lip_b)
                        cont_ok = false;
                    if (vn < v - 1e-12)
                        mono_ok = false;
                }
            }
        }
        push_check("continuity", cont_ok, "adjacent differences within 2*step");
        push_check("monotone_in_beta", mono_ok, "d non-decreasing along every beta column");
    }

    {
        const std::vector<double> rhos = cfg.rho_list.empty() ? default_rho_list() : cfg.rho_list;
        bool slopes_ok = true;
        std::string detail;
        for (const auto& [a, b] : region_representatives()) {
            const VerifyPointResult r = verify_point(a, b, rhos, cfg.tol, cfg.opt);
            const bool sandwich = r.report.closed_form <= r.report.bound_slope + cfg.tol;
            if (!r.passed || !sandwich) {
                slopes_ok = false;
                detail += "(" + format_sig(a) + "," + format_sig(b) + ") achieved " +
                          format_sig(r.report.achieved_slope) + " vs " +
                          format_sig(r.report.closed_form) + "; ";
            }
        }
        push_check("slope_sandwich", slopes_ok,
                   slopes_ok ? "all region representatives within tolerance" : detail);
    }

    {
        const auto records = consistency_report(g);
        json audit;
        audit["count"] = records.size();
        audit["informational"] = true;
        json examples = json::array();
        for (size_t k = 0; k < records.size() && examples.size() < 10; ++k) {
            examples.push_back(json{{"alpha", records[k].alpha},
                                    {"beta", records[k].beta},
                                    {"minmax", records[k].minmax_value},
                                    {"table", records[k].table_value}});
        }
        audit["examples"] = examples;
        out.details["minmax_discrepancies"] = audit;
    }

    out.details["checks"] = checks;
    out.details["passed"] = all_ok;
    out.passed = all_ok;
    return out;
}

} // namespace icscr
