// SPDX-License-Identifier: Apache-2.0

#include "icscr/gdof.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace icscr {

namespace {

void check_exponents(double alpha, double beta)
{
    if (!(alpha >= 0.0) || !(beta >= 0.0))
        throw std::invalid_argument("exponents must be nonnegative");
}

} // namespace

bool region_condition(Region r, double a, double b)
{
    switch (r) {
    case Region::r1: return a >= 2.0 && b <= 1.0;
    case Region::r2: return a <= b && b <= 2.0 && a <= 1.0;
    case Region::r3: return std::max(1.0, 2.0 * b) <= a && a <= 2.0;
    case Region::r4: return a >= std::max(1.0, b) && b >= std::min(0.5 * a, 1.0);
    case Region::r5: return a <= b && b <= 2.0 * a && a >= 1.0;
    case Region::r6: return 0.5 * (b + 1.0) <= a && a <= 2.0 / 3.0;
    case Region::r7: return b >= std::max(2.0, 2.0 * a);
    case Region::r8: return std::min(2.0 * a - 1.0, 0.5 * a) <= b && b <= a && a <= 1.0;
    case Region::r9: return std::max(2.0 / 3.0, 2.0 * b) <= a && a <= 1.0;
    }
    return false;
}

double region_value(Region r, double a, double b)
{
    switch (r) {
    case Region::r1: return 1.0;
    case Region::r2: return 1.0;
    case Region::r3: return 0.5 * a;
    case Region::r4: return b;
    case Region::r5: return a;
    case Region::r6: return a;
    case Region::r7: return 0.5 * b;
    case Region::r8: return 1.0 + b - a;
    case Region::r9: return 1.0 - 0.5 * a;
    }
    return 0.0;
}

Region classify(double alpha, double beta)
{
    check_exponents(alpha, beta);
    for (int i = 1; i <= 9; ++i) {
        const auto r = static_cast<Region>(i);
        if (region_condition(r, alpha, beta))
            return r;
    }
    // The nine closed conditions cover the whole quadrant; reaching this
    // line would mean a broken condition table.
    throw std::logic_error("exponent point not covered by any region");
}

double gdof_value(double alpha, double beta)
{
    return region_value(classify(alpha, beta), alpha, beta);
}

double GdofBoundSet::min_bound() const
{
    double m = single_user;
    for (const auto& t : {mac_strong, mac_mixed, z_channel, weak_interference})
        if (t)
            m = std::min(m, *t);
    return m;
}

GdofBoundSet gdof_upper_bounds(double alpha, double beta)
{
    check_exponents(alpha, beta);
    GdofBoundSet set;
    set.single_user = std::max(1.0, beta);
    if (alpha > std::max(1.0, beta))
        set.mac_strong = std::max(beta, 0.5 * alpha);
    if (beta > alpha && alpha > 1.0)
        set.mac_mixed = std::max(0.5 * beta, alpha);
    if (alpha < 1.0) {
        set.z_channel = std::max({1.0 - 0.5 * alpha, beta, 1.0 + beta - alpha, 1.0});
        set.weak_interference = std::max(1.0 + beta - alpha, 1.0);
    }
    return set;
}

double gdof_minmax_form(double alpha, double beta)
{
    check_exponents(alpha, beta);
    if (alpha > 1.0) {
        return std::min({std::max(1.0, beta),
                         std::max(beta, 0.5 * alpha),
                         std::max(alpha, 0.5 * beta)});
    }
    return std::min(std::max(1.0 + beta - alpha, alpha),
                    std::max({1.0 - 0.5 * alpha, beta, 1.0 + beta - alpha, 1.0}));
}

int GridSpec::alpha_count() const
{
    return 1 + static_cast<int>(std::floor((alpha_max - alpha_min) / alpha_step + 0.5));
}

int GridSpec::beta_count() const
{
    return 1 + static_cast<int>(std::floor((beta_max - beta_min) / beta_step + 0.5));
}

bool GridSpec::valid() const
{
    return alpha_step > 0.0 && beta_step > 0.0 && alpha_min >= 0.0 && beta_min >= 0.0 &&
           alpha_max >= alpha_min && beta_max >= beta_min;
}

std::vector<Discrepancy> consistency_report(const GridSpec& grid, double tol)
{
    if (!grid.valid() || grid.alpha_count() <= 0 || grid.beta_count() <= 0)
        throw std::invalid_argument("consistency_report needs a nonempty grid");
    std::vector<Discrepancy> records;
    const int na = grid.alpha_count();
    const int nb = grid.beta_count();
    for (int i = 0; i < na; ++i) {
        const double a = grid.alpha_at(i);
        for (int j = 0; j < nb; ++j) {
            const double b = grid.beta_at(j);
            const double mm = gdof_minmax_form(a, b);
            const double tv = gdof_value(a, b);
            if (std::fabs(mm - tv) > tol)
                records.push_back({a, b, mm, tv});
        }
    }
    return records;
}

} // namespace icscr
