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

#include "ehrelay/errors.hpp"
#include "ehrelay/fuzz.hpp"
#include "ehrelay/halfduplex.hpp"
#include "ehrelay/singlehop.hpp"
#include "support/reference.hpp"

using namespace ehrelay;

namespace {

const EnergyArrivalProfile kExampleRelay({{0, 5}, {7, 5}, {10, 6}});

Scenario half(double horizon, std::vector<EnergyArrival> src, EnergyArrivalProfile relay) {
    Scenario s;
    s.horizon = horizon;
    s.source = EnergyArrivalProfile(std::move(src));
    s.relay = std::move(relay);
    s.mode = RelayMode::HalfDuplex;
    return s;
}

}  // namespace

TEST_CASE("breakpoint chain on the example relay profile") {
    const auto c = construct_breakpoints(kExampleRelay, 11.0);
    REQUIRE(c.breakpoints.size() == 3);
    CHECK(std::abs(c.breakpoints[0] - 25.0 / 3.0) <= 1e-9);
    CHECK(std::abs(c.breakpoints[1] - 4.0) <= 1e-9);
    CHECK(std::abs(c.breakpoints[2]) <= 1e-9);
    CHECK(c.segment_index(5.0) == 2);
    CHECK(c.segment_index(9.0) == 3);
    CHECK(c.corners[c.first_target(5.0)].x == 10.0);
    CHECK(c.corners[c.first_target(9.0)].x == 11.0);
    CHECK(c.corners[c.first_target(1.0)].x == 7.0);

    // Every chain line stays on or below the staircase.
    for (std::size_t i = 0; i < c.anchors.size(); ++i) {
        const auto& a = c.corners[c.anchors[i]];
        const double slope = a.y / (a.x - c.breakpoints[i]);
        for (const auto& corner : c.corners)
            if (corner.x >= c.breakpoints[i] && corner.x <= a.x)
                CHECK(slope * (corner.x - c.breakpoints[i]) <= corner.y + 1e-12);
    }
}

TEST_CASE("breakpoint chain degenerate profiles") {
    const auto single = construct_breakpoints(EnergyArrivalProfile({{0, 4}}), 6.0);
    REQUIRE(single.breakpoints.size() == 1);
    CHECK(single.breakpoints[0] == 0.0);

    const double eps = 1e-3;
    const auto late = construct_breakpoints(EnergyArrivalProfile({{0, 1}, {10 - eps, 100}}), 10.0);
    REQUIRE_FALSE(late.breakpoints.empty());
    CHECK(late.corners[late.anchors[0]].x == 10.0);
    CHECK(late.breakpoints[0] < 10 - eps);
    CHECK(late.breakpoints[0] > 10 - 2 * eps);

    CHECK(construct_breakpoints(EnergyArrivalProfile{}, 5.0).breakpoints.empty());
    CHECK(construct_breakpoints(EnergyArrivalProfile({{1, 0}}), 5.0).breakpoints.empty());
}

TEST_CASE("breakpoints are strictly decreasing and end before the first arrival") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = fuzz::random_scenario(rng, RelayMode::HalfDuplex);
        const auto c = construct_breakpoints(s.relay, s.horizon);
        if (c.breakpoints.empty()) continue;
        for (std::size_t i = 1; i < c.breakpoints.size(); ++i) CHECK(c.breakpoints[i] < c.breakpoints[i - 1]);
        double first = s.horizon;
        for (const auto& a : s.relay.arrivals())
            if (a.amount > 0.0) { first = a.instant; break; }
        CHECK(c.breakpoints.back() <= first + 1e-12);
    }
}

TEST_CASE("relay capacity") {
    const RateFunction r;
    CHECK(relay_capacity(kExampleRelay, r, 5.0, 11.0) ==
          doctest::Approx(5 * testing::r2(2) + testing::r2(6)).epsilon(1e-12));
    CHECK(relay_capacity(kExampleRelay, r, 5.0, 11.0) == doctest::Approx(5.3661).epsilon(1e-5));
    CHECK(relay_capacity(kExampleRelay, r, 0.0, 11.0) == doctest::Approx(testing::example_relay_ceiling()));
    CHECK(relay_capacity(kExampleRelay, r, 11.0, 11.0) == 0.0);
    CHECK(relay_capacity(kExampleRelay, r, 11.0 - 1e-9, 11.0) < 1e-7);

    double prev = relay_capacity(kExampleRelay, r, 0.0, 11.0);
    for (double t = 0.05; t < 11.0; t += 0.05) {
        const double v = relay_capacity(kExampleRelay, r, t, 11.0);
        CHECK(v == doctest::Approx(testing::example_relay_capacity(t)).epsilon(1e-12));
        CHECK(v <= prev + 1e-12);
        prev = v;
    }
}

TEST_CASE("relay consumption follows the chain from the switch time") {
    const RateFunction r;
    const auto c = construct_breakpoints(kExampleRelay, 11.0);
    for (const double t : {0.5, 2.0, 4.5, 5.0, 7.5, 8.5, 10.5}) {
        const auto sched = relay_capacity_schedule(kExampleRelay, r, t, 11.0);
        REQUIRE_FALSE(sched.runs.empty());
        const auto& target = c.corners[c.first_target(t)];
        CHECK(sched.runs.front().instant == doctest::Approx(target.x));
        CHECK(sched.schedule.energy_until(target.x) == doctest::Approx(target.y));
    }
}

TEST_CASE("source bits") {
    const RateFunction r;
    CHECK(source_bits(1.0, r, 1.0) == doctest::Approx(0.5));
    CHECK(source_bits(0.0, r, 3.0) == 0.0);
    CHECK(source_bits(3.0, r, 0.0) == 0.0);
    CHECK(source_bits(3.0, r, 1.0) == doctest::Approx(1.0));
    CHECK(source_bits(3.0, r, 2.0) == doctest::Approx(1.3219).epsilon(1e-4));
    CHECK(source_bits(3.0, r, 3.0) == doctest::Approx(1.5));
    CHECK(source_bits(3.0, r, 1e-12) < 1e-9);
}

TEST_CASE("symmetric half-duplex splits the horizon") {
    const auto sol = solve_half_duplex_single_packet(half(2.0, {{0, 1}}, EnergyArrivalProfile({{0, 1}})));
    REQUIRE(sol.switch_time.has_value());
    CHECK(std::abs(*sol.switch_time - 1.0) <= 1e-9);
    CHECK(std::abs(sol.delivered_bits - 0.5) <= 1e-9);
    CHECK(sol.feasibility.feasible);
}

TEST_CASE("example relay with E = 17.14 matches the exhaustive t-grid") {
    const auto sol = solve_half_duplex_single_packet(half(11.0, {{0, 17.14}}, kExampleRelay));
    REQUIRE(sol.switch_time.has_value());
    const auto grid = testing::example_half_duplex_grid(17.14, 1e-5);
    CHECK(std::abs(*sol.switch_time - grid.t) <= 2e-5);
    CHECK(sol.delivered_bits >= grid.bits - 1e-9);
    CHECK(sol.delivered_bits - grid.bits <= 1e-5);
    CHECK(*sol.switch_time == doctest::Approx(5.0).epsilon(1e-3));
    CHECK(sol.delivered_bits == doctest::Approx(5.366).epsilon(1e-3));
    CHECK(construct_breakpoints(kExampleRelay, 11.0).segment_index(*sol.switch_time) == 2);

    // Time-disjoint, source at E/t*, relay starts at t*.
    CHECK(sol.source_schedule.power_at(1.0) == doctest::Approx(17.14 / *sol.switch_time));
    CHECK(sol.relay_schedule.energy_until(*sol.switch_time) == 0.0);
    CHECK(sol.feasibility.feasible);
}

TEST_CASE("switch time balances supply and capacity") {
    std::mt19937_64 rng(57);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = fuzz::random_single_packet_scenario(rng);
        const auto sol = solve_half_duplex_single_packet(s);
        CHECK(sol.feasibility.feasible);
        CHECK(sol.feasibility.min_data_slack >= -1e-9);
        if (!sol.switch_time) {
            CHECK(sol.delivered_bits == 0.0);
            continue;
        }
        const double t = *sol.switch_time;
        const double energy = s.source.total();
        const double tol = 1e-9 * s.horizon;
        const double gap = source_bits(energy, s.source_rate, t) - relay_capacity(s.relay, s.relay_rate, t, s.horizon);
        CHECK(std::abs(gap) <= s.source_rate.rate(energy / t) * tol + 1e-12);
        for (const auto& seg : sol.source_schedule.segments())
            if (seg.power > 0.0) CHECK(sol.relay_schedule.energy_until(seg.end) == 0.0);
    }
}

TEST_CASE("sweep over source energy is monotone and below the ceiling") {
    double prev_b = 0.0, prev_t = 11.0;
    for (int i = 0; i <= 100; ++i) {
        const double e = 0.5 + (50.0 - 0.5) * i / 100.0;
        const auto sol = solve_half_duplex_single_packet(half(11.0, {{0, e}}, kExampleRelay));
        CHECK(sol.delivered_bits >= prev_b - 1e-12);
        CHECK(*sol.switch_time <= prev_t + 1e-12);
        CHECK(sol.delivered_bits < testing::example_relay_ceiling());
        prev_b = sol.delivered_bits;
        prev_t = *sol.switch_time;
    }
}

TEST_CASE("degenerate and unsupported inputs") {
    const auto dead = solve_half_duplex_single_packet(half(4.0, {{0, 3}}, EnergyArrivalProfile{}));
    CHECK(dead.delivered_bits == 0.0);
    CHECK_FALSE(dead.switch_time.has_value());
    const auto empty = solve_half_duplex_single_packet(half(4.0, {}, EnergyArrivalProfile({{0, 3}})));
    CHECK(empty.delivered_bits == 0.0);

    CHECK_THROWS_AS(solve_half_duplex_single_packet(half(11.0, {{0, 1}, {2, 1}}, kExampleRelay)),
                    UnsupportedModeError);
    try {
        (void)solve_half_duplex_single_packet(half(4.0, {{1, 1}}, EnergyArrivalProfile({{0, 1}})));
        FAIL("expected UnsupportedModeError");
    } catch (const UnsupportedModeError& e) {
        CHECK(std::string(e.what()).find("grid_half_duplex") != std::string::npos);
    }
}

TEST_CASE("alternating schedules") {
    const RateFunction r;
    const auto ex = eval_fixed_alternating_schedule(3.0, 1.0, r);
    CHECK(ex.interleaved_bits == doctest::Approx(0.5 + 0.5 * std::log2(3.0)).epsilon(1e-12));
    CHECK(ex.contiguous_bits == doctest::Approx(std::log2(2.5)).epsilon(1e-12));
    CHECK(std::abs(ex.interleaved_bits - 1.2925) <= 1e-4);
    CHECK(std::abs(ex.contiguous_bits - 1.3219) <= 1e-4);

    const auto tiny = eval_fixed_alternating_schedule(1e-12, 1.0, r);
    CHECK(tiny.interleaved_bits < 1e-11);
    CHECK(tiny.contiguous_bits - tiny.interleaved_bits < 1e-12);

    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(1e-3, 100.0);
    for (int i = 0; i < 1000; ++i) {
        const auto c = eval_fixed_alternating_schedule(u(rng), u(rng) / 10.0, r);
        CHECK(c.interleaved_bits < c.contiguous_bits);
    }
}
