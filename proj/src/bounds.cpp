// SPDX-License-Identifier: Apache-2.0

#include "icscr/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace icscr {

double capacity_c(double x)
{
    if (!(x >= 0.0))
        throw std::invalid_argument("capacity_c needs x >= 0");
    return std::log2(1.0 + x);
}

void validate(const OptimizerSettings& opt)
{
    if (!(opt.grid_step > 0.0) || opt.grid_step > 0.05)
        throw std::invalid_argument("grid_step must be in (0, 0.05]");
    if (opt.multistart_count < 1)
        throw std::invalid_argument("multistart_count must be at least 1");
    if (opt.refinement_iterations < 0)
        throw std::invalid_argument("refinement_iterations must be nonnegative");
}

namespace snr {

// Residual gain h_r (1 - h_d / h_c) left on the relay path when one cross
// link is nulled at the source side. Zero when the nulling degenerates.
static double zf_residual(const ChannelParams& p)
{
    if (p.h_c == 0.0 || p.h_r == 0.0)
        return 0.0;
    return p.h_r * (1.0 - p.h_d / p.h_c);
}

double zf_mac(const ChannelParams& p, double b1, double b2)
{
    const double res = zf_residual(p);
    const double t = p.h_c + b2 * p.h_r;
    return (b1 * b1 * res * res + t * t) * p.P;
}

double mac_sum_rx1(const ChannelParams& p, double b1, double b2)
{
    const double u = p.h_d + b1 * p.h_r;
    const double v = p.h_c + b2 * p.h_r;
    return (u * u + v * v) * p.P;
}

double mac_sum_rx2(const ChannelParams& p, double b1, double b2)
{
    return mac_sum_rx1(p, b2, b1);
}

double direct(const ChannelParams& p, double a1, double b1)
{
    const double u = a1 * p.h_d + b1 * p.h_r;
    return u * u * p.P;
}

double z_second_user(const ChannelParams& p, double a1, double b1, double b2)
{
    const double num = p.h_d + b2 * p.h_r;
    const double v = a1 * p.h_c + b1 * p.h_r;
    return num * num * p.P / (1.0 + v * v * p.P);
}

double z_second_user_nulled(const ChannelParams& p, double a1, double b1, double b2)
{
    const double res = zf_residual(p);
    const double v = a1 * p.h_c + b1 * p.h_r;
    return b2 * b2 * res * res * p.P / (1.0 + v * v * p.P);
}

double genie_rx1(const ChannelParams& p, const RelayCoefficients& c)
{
    const double t = c.a2 * p.h_c + c.b2 * p.h_r;
    const double u = c.a1 * p.h_d + c.b1 * p.h_r;
    const double v = c.a1 * p.h_c + c.b1 * p.h_r;
    return t * t * p.P + u * u * p.P / (1.0 + v * v * p.P);
}

double genie_rx2(const ChannelParams& p, const RelayCoefficients& c)
{
    const double v = c.a1 * p.h_c + c.b1 * p.h_r;
    const double s = c.a2 * p.h_d + c.b2 * p.h_r;
    const double t = c.a2 * p.h_c + c.b2 * p.h_r;
    return v * v * p.P + s * s * p.P / (1.0 + t * t * p.P);
}

} // namespace snr

namespace {

constexpr double kZfMargin = 1e-9;     // excluded band around the nulled manifold
constexpr double kRefineStepMin = 1e-7;
constexpr double kSeedTol = 1e-12;
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

struct Candidate {
    double value = -std::numeric_limits<double>::infinity();
    RelayCoefficients point;
};

bool lex_less(const RelayCoefficients& x, const RelayCoefficients& y)
{
    return std::tie(x.a1, x.a2, x.b1, x.b2) < std::tie(y.a1, y.a2, y.b1, y.b2);
}

// Replacement rule: strictly larger value, or equal value with a
// lexicographically smaller argmax. Order-independent, hence deterministic
// no matter how the grid is traversed.
bool improves(double v, const RelayCoefficients& c, const Candidate& best)
{
    return v > best.value || (v == best.value && lex_less(c, best.point));
}

// Keeps the best k candidates, sorted by (value desc, argmax lex asc).
class TopK {
public:
    explicit TopK(int k) : k_(static_cast<size_t>(k)) {}

    double threshold() const
    {
        return items_.size() < k_ ? -std::numeric_limits<double>::infinity()
                                  : items_.back().value;
    }

    void offer(double v, const RelayCoefficients& c)
    {
        if (items_.size() >= k_) {
            const Candidate& last = items_.back();
            if (!(v > last.value || (v == last.value && lex_less(c, last.point))))
                return;
        }
        const Candidate cand{v, c};
        auto pos = std::upper_bound(items_.begin(), items_.end(), cand,
                                    [](const Candidate& a, const Candidate& b) {
                                        if (a.value != b.value)
                                            return a.value > b.value;
                                        return lex_less(a.point, b.point);
                                    });
        items_.insert(pos, cand);
        if (items_.size() > k_)
            items_.pop_back();
    }

    const std::vector<Candidate>& items() const { return items_; }

private:
    size_t k_;
    std::vector<Candidate> items_;
};

std::vector<double> grid_axis(const Interval& iv, double step)
{
    if (!(iv.hi > iv.lo))
        return {iv.lo};
    const int n = 1 + static_cast<int>(std::lround((iv.hi - iv.lo) / step));
    std::vector<double> xs(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
        xs[static_cast<size_t>(i)] =
            iv.lo + (iv.hi - iv.lo) * (static_cast<double>(i) / (n - 1));
    return xs;
}

bool in_box(double x, const Interval& iv)
{
    return x >= iv.lo - 1e-12 && x <= iv.hi + 1e-12;
}

// Arc-length-uniform polar grid over the unit disk, outermost ring first,
// filtered to the fold box. Ring point counts are multiples of 4 so the
// axes land on the grid exactly.
std::vector<std::pair<double, double>> disk_grid(const Interval& fold_b1, const Interval& fold_b2,
                                                 double step)
{
    std::vector<std::pair<double, double>> pts;
    const int nr = std::max(1, static_cast<int>(std::lround(1.0 / step)));
    for (int k = nr; k >= 0; --k) {
        const double r = static_cast<double>(k) / nr;
        if (k == 0) {
            if (in_box(0.0, fold_b1) && in_box(0.0, fold_b2))
                pts.emplace_back(0.0, 0.0);
            continue;
        }
        int nt = static_cast<int>(std::lround(2.0 * M_PI * r / step));
        nt = std::max(4, ((nt + 3) / 4) * 4);
        for (int i = 0; i < nt; ++i) {
            const double th = 2.0 * M_PI * i / nt;
            const double b1 = r * std::cos(th);
            const double b2 = r * std::sin(th);
            if (in_box(b1, fold_b1) && in_box(b2, fold_b2))
                pts.emplace_back(b1, b2);
        }
    }
    return pts;
}

RelayCoefficients canonicalize(const SearchDomain& d, RelayCoefficients c)
{
    if (!d.use_a1)
        c.a1 = d.fixed_a1;
    if (!d.use_a2)
        c.a2 = d.fixed_a2;
    if (!d.use_b) {
        c.b1 = d.fixed_b1;
        c.b2 = d.fixed_b2;
    }
    return c;
}

bool domain_feasible(const SearchDomain& d, const RelayCoefficients& c)
{
    if (!coefficients_feasible(c, kSeedTol))
        return false;
    return !d.feasible || d.feasible(c);
}

double clamp_unit(double x)
{
    return std::clamp(x, -1.0, 1.0);
}

// Compass search over the active coordinates. Moves stay inside the true
// feasible set: a-coordinates clamp to [-1, 1], b-moves are scaled back
// onto the unit disk. Step halves whenever no direction improves.
template <class F>
Candidate refine(F&& f, const SearchDomain& d, Candidate start, double step0, int iters)
{
    Candidate cur = start;
    double h = step0;
    for (int it = 0; it < iters && h >= kRefineStepMin; ++it) {
        bool moved = false;
        for (int coord = 0; coord < 4; ++coord) {
            if ((coord == 0 && !d.use_a1) || (coord == 1 && !d.use_a2) ||
                (coord >= 2 && !d.use_b))
                continue;
            for (double sgn : {1.0, -1.0}) {
                RelayCoefficients c = cur.point;
                switch (coord) {
                case 0: c.a1 = clamp_unit(c.a1 + sgn * h); break;
                case 1: c.a2 = clamp_unit(c.a2 + sgn * h); break;
                case 2: c.b1 = clamp_unit(c.b1 + sgn * h); break;
                default: c.b2 = clamp_unit(c.b2 + sgn * h); break;
                }
                const double nb = std::sqrt(c.b1 * c.b1 + c.b2 * c.b2);
                if (nb > 1.0) {
                    c.b1 /= nb;
                    c.b2 /= nb;
                }
                if (d.feasible && !d.feasible(c))
                    continue;
                const double v = f(c);
                if (v > cur.value) {
                    cur = {v, c};
                    moved = true;
                }
            }
        }
        if (!moved)
            h *= 0.5;
    }
    return cur;
}

template <class F>
MaxResult maximize_impl(F&& f, const SearchDomain& d, const OptimizerSettings& opt)
{
    validate(opt);
    const std::vector<double> a1s =
        d.use_a1 ? grid_axis(d.grid_a1, opt.grid_step) : std::vector<double>{d.fixed_a1};
    const std::vector<double> a2s =
        d.use_a2 ? grid_axis(d.grid_a2, opt.grid_step) : std::vector<double>{d.fixed_a2};
    const std::vector<std::pair<double, double>> bs =
        d.use_b ? disk_grid(d.grid_b1, d.grid_b2, opt.grid_step)
                : std::vector<std::pair<double, double>>{{d.fixed_b1, d.fixed_b2}};

    TopK top(opt.multistart_count);
    bool any = false;
    for (const auto& bp : bs) {
        for (const double a1 : a1s) {
            for (const double a2 : a2s) {
                const RelayCoefficients c{a1, a2, bp.first, bp.second};
                if (d.feasible && !d.feasible(c))
                    continue;
                any = true;
                top.offer(f(c), c);
            }
        }
    }

    std::vector<Candidate> starts = top.items();
    for (const auto& seed : opt.seed_points) {
        const RelayCoefficients c = canonicalize(d, seed);
        if (!domain_feasible(d, c))
            continue;
        any = true;
        starts.push_back({f(c), c});
    }
    if (!any)
        throw std::domain_error("empty feasible set");

    Candidate best;
    for (const auto& s : starts)
        if (improves(s.value, s.point, best))
            best = s;
    for (const auto& s : starts) {
        const Candidate r = refine(f, d, s, opt.grid_step, opt.refinement_iterations);
        if (improves(r.value, r.point, best))
            best = r;
    }
    return {best.value, best.point};
}

OptimizerSettings with_seeds(const OptimizerSettings& opt,
                             std::initializer_list<RelayCoefficients> extra)
{
    OptimizerSettings o = opt;
    o.seed_points.insert(o.seed_points.end(), extra.begin(), extra.end());
    return o;
}

// Shared machinery of the two MAC-regime bounds: the closed-form value of
// the fully nulled configuration plus the two optimized terms.
OptimizedValue mac_bound_common(const ChannelParams& p, const OptimizerSettings& opt,
                                double case_i_rate, const RelayCoefficients& case_i_coeffs)
{
    SearchDomain db;
    db.use_b = true;
    db.grid_b1 = {0.0, 1.0}; // both objectives are even in b1 and increasing in b2
    db.grid_b2 = {0.0, 1.0};
    const OptimizerSettings o = with_seeds(opt, {{1.0, 1.0, 0.0, 1.0},
                                                 {1.0, 1.0, 1.0, 0.0},
                                                 {1.0, 1.0, kInvSqrt2, kInvSqrt2}});

    const MaxResult m1 = maximize_impl(
        [&p](const RelayCoefficients& c) { return snr::zf_mac(p, c.b1, c.b2); }, db, o);
    const MaxResult m2 = maximize_impl(
        [&p](const RelayCoefficients& c) {
            return std::min(snr::mac_sum_rx1(p, c.b1, c.b2), snr::mac_sum_rx2(p, c.b1, c.b2));
        },
        db, o);

    OptimizedValue out{case_i_rate, case_i_coeffs, "relay_zero_forcing"};
    if (capacity_c(m1.value) > out.value)
        out = {capacity_c(m1.value), m1.argmax, "one_sided_zero_forcing"};
    if (capacity_c(m2.value) > out.value)
        out = {capacity_c(m2.value), m2.argmax, "joint_decoding"};
    return out;
}

} // namespace

MaxResult maximize(const std::function<double(const RelayCoefficients&)>& objective,
                   const SearchDomain& domain, const OptimizerSettings& opt)
{
    if (!objective)
        throw std::invalid_argument("maximize needs an objective");
    return maximize_impl(objective, domain, opt);
}

double single_user_bound(const ChannelParams& p)
{
    validate(p);
    const double g = p.h_d + p.h_r;
    return capacity_c(g * g * p.P);
}

OptimizedValue mac_bound_strong(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    if (!(p.h_c > std::max(p.h_d, p.h_r)))
        throw std::domain_error("mac_bound_strong: inapplicable regime, needs h_c > max{h_d, h_r}");
    const double res = p.h_r * (1.0 - p.h_d / p.h_c);
    const double case_i = 2.0 * capacity_c(res * res * p.P);
    RelayCoefficients ci;
    ci.b1 = ci.b2 = kInvSqrt2;
    ci.a1 = ci.a2 = -kInvSqrt2 * p.h_r / p.h_c;
    return mac_bound_common(p, opt, case_i, ci);
}

OptimizedValue mac_bound_mixed(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    if (!(p.h_r > p.h_c && p.h_c > p.h_d))
        throw std::domain_error("mac_bound_mixed: inapplicable regime, needs h_r > h_c > h_d");
    const double diff = p.h_d - p.h_c;
    const double case_i = 2.0 * capacity_c(diff * diff * p.P);
    RelayCoefficients ci;
    ci.a1 = ci.a2 = kInvSqrt2;
    ci.b1 = ci.b2 = -kInvSqrt2 * p.h_c / p.h_r;
    return mac_bound_common(p, opt, case_i, ci);
}

OptimizedValue z_bound(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    if (!(p.h_c < p.h_d))
        throw std::domain_error("z_bound: inapplicable regime, needs h_c < h_d");

    const OptimizerSettings o = with_seeds(opt, {{1.0, 1.0, 1.0, 0.0},
                                                 {1.0, 1.0, kInvSqrt2, kInvSqrt2},
                                                 {1.0, 1.0, 0.0, 1.0},
                                                 {1.0, 1.0, 0.0, 0.0}});

    // Interference-present sub-case; both composite cross gains are kept
    // away from zero, the nulled manifold is covered by the second sub-case.
    SearchDomain d1;
    d1.use_a1 = true;
    d1.use_b = true;
    d1.grid_b1 = {0.0, 1.0}; // joint (a1, b1) sign flip leaves the objective unchanged
    d1.grid_b2 = {0.0, 1.0}; // larger b2 dominates
    d1.fixed_a2 = 1.0;
    d1.feasible = [&p](const RelayCoefficients& c) {
        return std::fabs(c.a1 * p.h_c + c.b1 * p.h_r) >= kZfMargin &&
               std::fabs(p.h_c + c.b2 * p.h_r) >= kZfMargin;
    };

    OptimizedValue out;
    bool have = false;
    try {
        const MaxResult m1 = maximize_impl(
            [&p](const RelayCoefficients& c) {
                return (1.0 + snr::direct(p, c.a1, c.b1)) *
                       (1.0 + snr::z_second_user(p, c.a1, c.b1, c.b2));
            },
            d1, o);
        out = {std::log2(m1.value), m1.argmax, "interference_present"};
        have = true;
    } catch (const std::domain_error&) {
        // whole sub-case infeasible (e.g. h_c = h_r = 0); fall through
    }

    SearchDomain d2 = d1;
    d2.feasible = nullptr;
    const MaxResult m2 = maximize_impl(
        [&p](const RelayCoefficients& c) {
            return (1.0 + snr::direct(p, c.a1, c.b1)) *
                   (1.0 + snr::z_second_user_nulled(p, c.a1, c.b1, c.b2));
        },
        d2, o);
    if (!have || std::log2(m2.value) > out.value)
        out = {std::log2(m2.value), m2.argmax, "second_cross_nulled"};
    return out;
}

OptimizedValue weak_interference_bound(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    if (!(p.h_c < p.h_d))
        throw std::domain_error("weak_interference_bound: inapplicable regime, needs h_c < h_d");

    const OptimizerSettings o = with_seeds(opt, {{1.0, 1.0, kInvSqrt2, kInvSqrt2},
                                                 {1.0, 1.0, 0.0, 0.0},
                                                 {1.0, 1.0, 1.0, 0.0},
                                                 {1.0, 1.0, 0.0, 1.0}});

    SearchDomain d;
    d.use_a1 = true;
    d.use_a2 = true;
    d.use_b = true;
    d.grid_b1 = {0.0, 1.0}; // joint (a_j, b_j) sign flips leave the objective unchanged
    d.grid_b2 = {0.0, 1.0};

    const auto obj = [&p](const RelayCoefficients& c) {
        return (1.0 + snr::genie_rx1(p, c)) * (1.0 + snr::genie_rx2(p, c));
    };

    // Specialized grid pass. The objective factorizes into per-user linear
    // forms, so the (b-point, a1) prefix is hoisted out of the a2 loop and
    // whole blocks are skipped via upper envelopes that bound |t| and |s|
    // over a2 in [-1, 1] (and |u|, |v| over a1). Envelopes are valid since
    // the grid is folded to b >= 0.
    const std::vector<double> axis = grid_axis({-1.0, 1.0}, o.grid_step);
    const std::vector<std::pair<double, double>> bs = disk_grid(d.grid_b1, d.grid_b2, o.grid_step);
    TopK top(o.multistart_count);
    for (const auto& bp : bs) {
        const double hb1 = bp.first * p.h_r;
        const double hb2 = bp.second * p.h_r;
        const double umax = p.h_d + hb1;
        const double vmax = p.h_c + hb1;
        const double tmax = p.h_c + hb2;
        const double smax = p.h_d + hb2;
        const double env_b = (1.0 + (tmax * tmax + umax * umax) * p.P) *
                             (1.0 + (vmax * vmax + smax * smax) * p.P);
        if (env_b < top.threshold())
            continue;
        for (const double a1 : axis) {
            const double u = a1 * p.h_d + hb1;
            const double v = a1 * p.h_c + hb1;
            const double vv = v * v * p.P;
            const double A = u * u * p.P / (1.0 + vv);
            const double env_a = (1.0 + tmax * tmax * p.P + A) *
                                 (1.0 + vv + smax * smax * p.P);
            if (env_a < top.threshold())
                continue;
            for (const double a2 : axis) {
                const double t = a2 * p.h_c + hb2;
                const double s = a2 * p.h_d + hb2;
                const double tt = t * t * p.P;
                const double f = (1.0 + tt + A) * (1.0 + vv + s * s * p.P / (1.0 + tt));
                top.offer(f, {a1, a2, bp.first, bp.second});
            }
        }
    }

    std::vector<Candidate> starts = top.items();
    for (const auto& seed : o.seed_points) {
        const RelayCoefficients c = canonicalize(d, seed);
        if (!domain_feasible(d, c))
            continue;
        starts.push_back({obj(c), c});
    }
    Candidate best;
    for (const auto& s : starts)
        if (improves(s.value, s.point, best))
            best = s;
    for (const auto& s : starts) {
        const Candidate r = refine(obj, d, s, o.grid_step, o.refinement_iterations);
        if (improves(r.value, r.point, best))
            best = r;
    }
    return {std::log2(best.value), best.point, "genie"};
}

BoundReport sum_rate_upper_bound(const ChannelParams& p, const OptimizerSettings& opt)
{
    validate(p);
    validate(opt);
    BoundReport report;
    report.single_user_each = single_user_bound(p);
    report.sum_rate_min = 2.0 * report.single_user_each;
    const auto fold_in = [&report](const OptimizedValue& v) {
        report.sum_rate_min = std::min(report.sum_rate_min, v.value);
    };
    if (p.h_c > std::max(p.h_d, p.h_r)) {
        report.mac_strong = mac_bound_strong(p, opt);
        fold_in(*report.mac_strong);
    }
    if (p.h_r > p.h_c && p.h_c > p.h_d) {
        report.mac_mixed = mac_bound_mixed(p, opt);
        fold_in(*report.mac_mixed);
    }
    if (p.h_c < p.h_d) {
        report.z_channel = z_bound(p, opt);
        fold_in(*report.z_channel);
        report.weak_interference = weak_interference_bound(p, opt);
        fold_in(*report.weak_interference);
    }
    return report;
}

} // namespace icscr
