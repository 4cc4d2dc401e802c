// SPDX-License-Identifier: Apache-2.0

#include <cmath>
#include <random>

#include "doctest.h"

#include "icscr/channel.hpp"

using namespace icscr;

TEST_SUITE_BEGIN("channel");

TEST_CASE("gains from exponents follow the power laws")
{
    const ChannelParams p = gains_from_exponents({1.0, 1.0, 100.0});
    CHECK(p.h_d == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(p.h_c == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(p.h_r == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(p.P == 1.0);

    const ChannelParams q = gains_from_exponents({2.0, 0.0, 100.0});
    CHECK(q.h_d == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(q.h_c == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(q.h_r == doctest::Approx(1.0).epsilon(1e-14));

    const ChannelParams r = gains_from_exponents({0.5, 1.5, 1e4});
    CHECK(r.h_d == doctest::Approx(100.0).epsilon(1e-14));
    CHECK(r.h_c == doctest::Approx(10.0).epsilon(1e-14));
    CHECK(r.h_r == doctest::Approx(1000.0).epsilon(1e-14));
}

TEST_CASE("gains_from_exponents rejects rho at or below 1")
{
    CHECK_THROWS_AS(gains_from_exponents({1.0, 1.0, 1.0}), std::invalid_argument);
    CHECK_THROWS_AS(gains_from_exponents({1.0, 1.0, 0.5}), std::invalid_argument);
    CHECK_THROWS_AS(gains_from_exponents({-0.1, 1.0, 10.0}), std::invalid_argument);
}

TEST_CASE("exponents from gains inverts the construction")
{
    const GdofPoint a = exponents_from_gains(make_channel(10, 10, 10, 1), 100.0);
    CHECK(a.alpha == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(a.beta == doctest::Approx(1.0).epsilon(1e-14));

    const GdofPoint b = exponents_from_gains(make_channel(10, 100, 1, 1), 100.0);
    CHECK(b.alpha == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(b.beta == doctest::Approx(0.0).epsilon(1e-14));

    const GdofPoint c = exponents_from_gains(make_channel(100, 10, 1000, 1), 1e4);
    CHECK(c.alpha == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(c.beta == doctest::Approx(1.5).epsilon(1e-14));

    CHECK_THROWS_AS(exponents_from_gains(make_channel(1, 0, 1, 1), 100.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exponents_from_gains(make_channel(1, 1, 1, 1), 1.0), std::invalid_argument);
}

TEST_CASE("round trip over random exponent points")
{
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> expd(0.0, 3.0);
    std::uniform_real_distribution<double> logrho(2.0, 40.0);
    for (int k = 0; k < 200; ++k) {
        GdofPoint pt{expd(rng), expd(rng), std::exp2(logrho(rng))};
        const ChannelParams p = gains_from_exponents(pt);
        const GdofPoint back = exponents_from_gains(p, pt.rho);
        CHECK(back.alpha == doctest::Approx(pt.alpha).epsilon(1e-12));
        CHECK(back.beta == doctest::Approx(pt.beta).epsilon(1e-12));
    }
}

TEST_CASE("effective gains of the cooperating system")
{
    const ChannelParams p = make_channel(1, 2, 3, 1);
    const double s = 1.0 / std::sqrt(2.0);
    const EffectiveGains g = effective_gains(p, {s, s, s, s});
    CHECK(g.g11 == doctest::Approx(4.0).epsilon(1e-14));
    CHECK(g.g12 == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(g.g21 == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(g.g22 == doctest::Approx(4.0).epsilon(1e-14));
}

TEST_CASE("silent relay reduces to the plain interference channel")
{
    const ChannelParams p = make_channel(1.7, 0.3, 2.5, 4.0);
    const EffectiveGains g = effective_gains(p, {1.0, 1.0, 0.0, 0.0});
    CHECK(g.g11 == p.h_d);
    CHECK(g.g12 == p.h_c);
    CHECK(g.g21 == p.h_c);
    CHECK(g.g22 == p.h_d);
}

TEST_CASE("zero-forcing choice nulls both cross gains")
{
    const ChannelParams p = make_channel(1, 3, 2, 1);
    const double b = 1.0 / std::sqrt(2.0);
    const double a = -b * p.h_r / p.h_c; // -sqrt(2)/3
    CHECK(a == doctest::Approx(-std::sqrt(2.0) / 3.0).epsilon(1e-14));
    const EffectiveGains g = effective_gains(p, {a, a, b, b});
    CHECK(std::fabs(g.g12) <= 1e-12);
    CHECK(std::fabs(g.g21) <= 1e-12);

    // property over random channels
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> gain(0.1, 10.0);
    std::uniform_real_distribution<double> bw(0.05, 1.0 / std::sqrt(2.0));
    for (int k = 0; k < 100; ++k) {
        const ChannelParams q = make_channel(gain(rng), gain(rng), gain(rng), 1.0);
        const double bj = bw(rng);
        const double aj = -bj * q.h_r / q.h_c;
        if (std::fabs(aj) > 1.0)
            continue;
        const EffectiveGains e = effective_gains(q, {aj, aj, bj, bj});
        CHECK(std::fabs(e.g12) <= 1e-12 * q.h_c);
        CHECK(std::fabs(e.g21) <= 1e-12 * q.h_c);
    }
}

TEST_CASE("effective gains reject zero source scalings")
{
    const ChannelParams p = make_channel(1, 1, 1, 1);
    CHECK_THROWS_AS(effective_gains(p, {0.0, 1.0, 0.5, 0.0}), std::invalid_argument);
    CHECK_THROWS_AS(effective_gains(p, {1.0, 0.0, 0.0, 0.5}), std::invalid_argument);
}

TEST_CASE("relay power constraint accepts the canonical splits")
{
    const double s = 1.0 / std::sqrt(2.0);
    CHECK(coefficients_feasible({s, s, s, s}));
    CHECK(coefficients_feasible({1.0, 1.0, 0.0, 1.0}));
    CHECK(coefficients_feasible({1.0, 1.0, 1.0, 0.0}));
    CHECK(!coefficients_feasible({1.0, 1.0, 0.9, 0.9}));
    CHECK(!coefficients_feasible({1.2, 1.0, 0.0, 0.0}));
}

TEST_CASE("channel validation")
{
    CHECK_THROWS_AS(make_channel(-1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_channel(1, 1, 1, 0), std::invalid_argument);
    CHECK_NOTHROW(make_channel(0, 0, 0, 1));
}

TEST_SUITE_END();
