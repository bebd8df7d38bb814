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

#include "ehrelay/fuzz.hpp"

#include <algorithm>
#include <set>

namespace ehrelay::fuzz {

EnergyArrivalProfile random_profile(std::mt19937_64& rng, double horizon, const ScenarioLimits& limits) {
    std::uniform_int_distribution<std::size_t> count(1, std::max<std::size_t>(1, limits.max_packets));
    std::uniform_int_distribution<std::size_t> slot(0, limits.instant_lattice - 1);
    std::uniform_real_distribution<double> amount(0.05 * limits.max_energy, limits.max_energy);
    std::bernoulli_distribution starts_at_zero(0.7);

    const std::size_t n = count(rng);
    std::set<std::size_t> picks;
    if (starts_at_zero(rng)) picks.insert(0);
    while (picks.size() < n) picks.insert(slot(rng));

    std::vector<EnergyArrival> arrivals;
    for (auto k : picks) {
        arrivals.push_back({horizon * static_cast<double>(k) / static_cast<double>(limits.instant_lattice), amount(rng)});
    }
    return EnergyArrivalProfile(std::move(arrivals));
}

namespace {

void randomise_channel(std::mt19937_64& rng, Scenario& s, const ScenarioLimits& limits) {
    std::uniform_real_distribution<double> gain(limits.min_gain, limits.max_gain);
    s.source_rate = RateFunction(gain(rng));
    s.relay_rate = RateFunction(gain(rng));
}

double random_horizon(std::mt19937_64& rng, const ScenarioLimits& limits) {
    std::uniform_real_distribution<double> horizon(std::min(1.0, limits.max_horizon), limits.max_horizon);
    return horizon(rng);
}

}  // namespace

Scenario random_scenario(std::mt19937_64& rng, RelayMode mode, const ScenarioLimits& limits) {
    Scenario s;
    s.mode = mode;
    s.horizon = random_horizon(rng, limits);
    s.source = random_profile(rng, s.horizon, limits);
    s.relay = random_profile(rng, s.horizon, limits);
    randomise_channel(rng, s, limits);
    return s;
}

Scenario random_single_packet_scenario(std::mt19937_64& rng, const ScenarioLimits& limits) {
    Scenario s;
    s.mode = RelayMode::HalfDuplex;
    s.horizon = random_horizon(rng, limits);
    std::uniform_real_distribution<double> amount(0.05 * limits.max_energy, limits.max_energy);
    s.source = EnergyArrivalProfile({{0.0, amount(rng)}});
    s.relay = random_profile(rng, s.horizon, limits);
    randomise_channel(rng, s, limits);
    return s;
}

PowerSchedule random_feasible_schedule(std::mt19937_64& rng, const EnergyArrivalProfile& profile,
                                       double horizon, std::size_t max_cuts) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_int_distribution<std::size_t> cut_count(0, max_cuts);

    std::vector<double> cuts = profile.instants();
    for (std::size_t i = cut_count(rng); i > 0; --i) cuts.push_back(horizon * unit(rng));
    cuts.push_back(0.0);
    cuts.push_back(horizon);
    std::erase_if(cuts, [&](double x) { return x < 0.0 || x > horizon; });
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<PowerSegment> segments;
    double consumed = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const double len = cuts[i + 1] - cuts[i];
        const double banked = std::max(0.0, profile.cumulative(cuts[i]) - consumed);
        const double u = unit(rng);
        const double fraction = u < 0.3 ? 1.0 : u;
        const double power = fraction * banked / len;
        segments.push_back({cuts[i], cuts[i + 1], power});
        consumed += power * len;
    }
    return PowerSchedule(std::move(segments), horizon);
}

}  // namespace ehrelay::fuzz
