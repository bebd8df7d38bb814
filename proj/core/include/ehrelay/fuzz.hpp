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

#pragma once

#include <cstddef>
#include <random>

#include "ehrelay/energy_profile.hpp"
#include "ehrelay/power_schedule.hpp"
#include "ehrelay/scenario.hpp"

namespace ehrelay::fuzz {

struct ScenarioLimits {
    std::size_t max_packets = 4;
    double max_horizon = 10.0;
    double max_energy = 10.0;
    double min_gain = 0.25;
    double max_gain = 4.0;
    /// Instants are drawn on a lattice of T / instant_lattice.
    std::size_t instant_lattice = 20;
};

EnergyArrivalProfile random_profile(std::mt19937_64& rng, double horizon, const ScenarioLimits& limits);

Scenario random_scenario(std::mt19937_64& rng, RelayMode mode, const ScenarioLimits& limits = {});

/// Single source packet at t = 0, random relay profile.
Scenario random_single_packet_scenario(std::mt19937_64& rng, const ScenarioLimits& limits = {});

/// Random energy-causal schedule: random cut points plus the arrival instants,
/// each segment spends a random fraction of the energy banked at its start.
PowerSchedule random_feasible_schedule(std::mt19937_64& rng, const EnergyArrivalProfile& profile,
                                       double horizon, std::size_t max_cuts = 6);

}  // namespace ehrelay::fuzz
