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

#include <algorithm>
#include <random>

#include "ehrelay/fullduplex.hpp"
#include "ehrelay/fuzz.hpp"
#include "ehrelay/singlehop.hpp"
#include "support/reference.hpp"

using namespace ehrelay;

namespace {

Scenario full(double horizon, std::vector<EnergyArrival> src, std::vector<EnergyArrival> relay) {
    Scenario s;
    s.horizon = horizon;
    s.source = EnergyArrivalProfile(std::move(src));
    s.relay = EnergyArrivalProfile(std::move(relay));
    return s;
}

}  // namespace

TEST_CASE("symmetric hops are data-tight throughout") {
    const auto sol = solve_full_duplex(full(3.0, {{0, 3}}, {{0, 3}}));
    CHECK(sol.delivered_bits == doctest::Approx(1.5).epsilon(1e-12));
    CHECK(sol.source_schedule.power_at(0.0) == doctest::Approx(1.0));
    CHECK(sol.relay_schedule.power_at(2.0) == doctest::Approx(1.0));
    for (double t = 0.0; t <= 3.0; t += 0.5) {
        CHECK(sol.source_bits(t) == doctest::Approx(0.5 * t));
        CHECK(sol.relay_bits(t) == doctest::Approx(sol.source_bits(t)));
    }
    CHECK(sol.feasibility.feasible);
    CHECK_FALSE(sol.switch_time.has_value());
}

TEST_CASE("source-limited and relay-limited extremes") {
    const auto a = solve_full_duplex(full(3.0, {{0, 3}}, {{0, 1000}}));
    CHECK(a.delivered_bits == doctest::Approx(1.5).epsilon(1e-12));

    const auto b = solve_full_duplex(full(11.0, {{0, 1000}}, {{0, 5}, {7, 5}, {10, 6}}));
    CHECK(std::abs(b.delivered_bits - testing::example_relay_ceiling()) <= 1e-6);
    CHECK(b.feasibility.feasible);

    const auto none = solve_full_duplex(full(4.0, {}, {{0, 3}}));
    CHECK(none.delivered_bits == 0.0);
}

TEST_CASE("delivered bits never exceed either hop alone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const auto s = fuzz::random_scenario(rng, RelayMode::FullDuplex);
        const auto sol = solve_full_duplex(s);
        const double src = max_bit_schedule(s.source, s.source_rate, 0.0, s.horizon).total_bits;
        const double rel = max_bit_schedule(s.relay, s.relay_rate, 0.0, s.horizon).total_bits;
        CHECK(sol.delivered_bits <= std::min(src, rel) + 1e-9);
        CHECK(sol.feasibility.feasible);
        CHECK(sol.feasibility.min_data_slack >= -1e-9);
    }
}

TEST_CASE("no fuzzed source schedule beats max-bit") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto s = fuzz::random_scenario(rng, RelayMode::FullDuplex);
        const double best = solve_full_duplex(s).delivered_bits;
        for (int k = 0; k < 10; ++k) {
            const auto alt = fuzz::random_feasible_schedule(rng, s.source, s.horizon);
            CHECK(delivered_bits_for_source(alt, s) <= best + 1e-9);
        }
    }
}
