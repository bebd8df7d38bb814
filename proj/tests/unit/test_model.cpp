/*
Copyright 2026 The ehrelay Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "ehrelay/curve.hpp"
#include "ehrelay/energy_profile.hpp"
#include "ehrelay/errors.hpp"
#include "ehrelay/power_schedule.hpp"
#include "ehrelay/rate_function.hpp"
#include "ehrelay/scenario.hpp"
#include "support/reference.hpp"

using namespace ehrelay;

TEST_CASE("rate function and its inverse") {
    const RateFunction r;
    CHECK(r.rate(0.0) == 0.0);
    CHECK(r.rate(3.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.power_for_rate(1.0) == doctest::Approx(3.0).epsilon(1e-15));

    for (const double gain : {0.25, 1.0, 3.7}) {
        for (const double base : {2.0, std::exp(1.0), 10.0}) {
            const RateFunction f(gain, base);
            for (double rho = 0.0; rho <= 64.0; rho += 0.125) {
                const double back = f.rate(f.power_for_rate(rho));
                CHECK(std::abs(back - rho) <= 1e-12 * std::max(1.0, rho));
            }
        }
    }

    CHECK_THROWS_AS(RateFunction(0.0), ValidationError);
    CHECK_THROWS_AS(RateFunction(1.0, 1.0), ValidationError);
}

TEST_CASE("rate function is concave and increasing") {
    const RateFunction r(2.0);
    double prev = r.rate(0.0);
    double prev_slope = r.slope(0.0);
    for (double p = 0.5; p < 50.0; p += 0.5) {
        CHECK(r.rate(p) > prev);
        CHECK(r.slope(p) < prev_slope);
        prev = r.rate(p);
        prev_slope = r.slope(p);
    }
    // g'(rho) = 1 / r'(g(rho))
    CHECK(r.inverse_slope(1.3) * r.slope(r.power_for_rate(1.3)) == doctest::Approx(1.0));
    CHECK(r.bits(3.0, 0.0) == 0.0);
    CHECK(RateFunction().bits(3.0, 3.0) == doctest::Approx(1.5));
}

TEST_CASE("cumulative arrivals") {
    const EnergyArrivalProfile p({{0, 5}, {7, 5}, {10, 6}});
    CHECK(cumulative_arrivals(p, 7.0, 11.0) == 10.0);
    CHECK(cumulative_arrivals(p, 6.999, 11.0) == 5.0);
    CHECK(cumulative_arrivals(p, 0.0, 11.0) == 5.0);
    CHECK(cumulative_arrivals(p, 11.0, 11.0) == 16.0);
    CHECK(p.cumulative_before(7.0) == 5.0);
    CHECK(p.cumulative_before(0.0) == 0.0);
    CHECK(cumulative_arrivals(EnergyArrivalProfile{}, 4.0, 11.0) == 0.0);

    CHECK_THROWS_AS((void)cumulative_arrivals(p, -0.1, 11.0), std::domain_error);
    CHECK_THROWS_AS((void)cumulative_arrivals(p, 11.5, 11.0), std::domain_error);
}

TEST_CASE("cumulative increments equal the packets in (a, b]") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<EnergyArrival> a;
        double t = 0.0;
        for (int i = 0; i < 5; ++i) {
            t += std::floor(u(rng)) / 5.0;
            a.push_back({t, u(rng)});
        }
        const EnergyArrivalProfile p(a);
        double x = u(rng) * 2.0, y = u(rng) * 2.0;
        if (x > y) std::swap(x, y);
        double expected = 0.0;
        for (const auto& e : a)
            if (e.instant > x && e.instant <= y) expected += e.amount;
        CHECK(p.cumulative(y) - p.cumulative(x) == doctest::Approx(expected));
    }
}

TEST_CASE("profile validation and lumping") {
    CHECK_THROWS_AS(EnergyArrivalProfile({{2, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(EnergyArrivalProfile({{0, -1}}), ValidationError);
    CHECK_THROWS_AS(EnergyArrivalProfile({{-1, 1}}), ValidationError);
    CHECK_THROWS_AS(EnergyArrivalProfile({{0, NAN}}), ValidationError);

    const EnergyArrivalProfile p({{0, 5}, {7, 5}, {10, 6}});
    const auto l = p.lumped_at(8.0);
    REQUIRE(l.arrivals().size() == 2);
    CHECK(l.arrivals()[0] == EnergyArrival{8.0, 10.0});
    CHECK(l.total() == 16.0);
    CHECK(p.instants() == std::vector<double>{0, 7, 10});
}

TEST_CASE("piecewise linear curve") {
    const PiecewiseLinearCurve c({{0, 0}, {1, 2}, {1, 3}, {3, 3}, {4, 5}});
    CHECK(c(0.5) == 1.0);
    CHECK(c(1.0) == 3.0);
    CHECK(c.left_limit(1.0) == 2.0);
    CHECK(c(2.0) == 3.0);
    CHECK(c(3.5) == 4.0);
    CHECK(c(9.0) == 5.0);
    CHECK(c.knots() == std::vector<double>{0, 1, 3, 4});

    // Evaluation is exact at breakpoints and monotone in between.
    for (const auto& pt : c.points()) CHECK(c.left_limit(pt.x) <= c(pt.x));
    double prev = 0.0;
    for (double x = 0.0; x <= 5.0; x += 0.01) {
        CHECK(c(x) >= prev);
        prev = c(x);
    }

    CHECK_THROWS_AS(PiecewiseLinearCurve({{1, 0}, {2, 1}}), ValidationError);
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0, 0}, {2, 1}, {1, 2}}), ValidationError);
    CHECK_THROWS_AS(PiecewiseLinearCurve({{0, 0}, {1, 2}, {2, 1}}), ValidationError);
}

TEST_CASE("power schedule accumulates energy and bits") {
    const RateFunction r;
    const PowerSchedule s({{0, 2, 1.0}, {2, 3, 3.0}}, 3.0);
    CHECK(s.power_at(1.0) == 1.0);
    CHECK(s.power_at(2.0) == 3.0);
    CHECK(s.power_at(3.0) == 3.0);
    CHECK(s.energy_until(2.5) == doctest::Approx(3.5));
    CHECK(s.total_energy() == doctest::Approx(5.0));
    CHECK(s.total_bits(r) == doctest::Approx(2 * testing::r2(1) + testing::r2(3)));
    CHECK(s.bit_curve(r)(2.0) == doctest::Approx(1.0));
    CHECK(s.energy_curve()(3.0) == doctest::Approx(5.0));
    CHECK(s.breakpoints() == std::vector<double>{0, 2, 3});

    CHECK(PowerSchedule::zero(4.0).total_energy() == 0.0);
    CHECK_THROWS_AS(PowerSchedule({{0, 1, 1}, {1.5, 3, 1}}, 3.0), ValidationError);
    CHECK_THROWS_AS(PowerSchedule({{0, 3, -1}}, 3.0), ValidationError);
    CHECK_THROWS_AS(PowerSchedule({{0, 2, 1}}, 3.0), ValidationError);
}

TEST_CASE("scenario validation") {
    Scenario s;
    s.horizon = 5.0;
    s.source = EnergyArrivalProfile({{0, 1}});
    CHECK_NOTHROW(s.validate());
    s.relay = EnergyArrivalProfile({{5, 1}});
    CHECK_THROWS_AS(s.validate(), ValidationError);
    s.relay = {};
    s.horizon = 0.0;
    CHECK_THROWS_AS(s.validate(), ValidationError);
    CHECK(to_string(RelayMode::HalfDuplex) != to_string(RelayMode::FullDuplex));
}
