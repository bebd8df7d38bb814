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
#include <vector>

#include "ehrelay/curve.hpp"
#include "ehrelay/energy_profile.hpp"
#include "ehrelay/power_schedule.hpp"
#include "ehrelay/rate_function.hpp"
#include "ehrelay/scenario.hpp"

namespace ehrelay::oracle {

inline constexpr std::size_t kMaxSlots = 2000;
inline constexpr std::size_t kMaxQuanta = 1000;

struct DpResult {
    double bits = 0.0;
    /// Upper bound on (true optimum - bits).
    double error_bound = 0.0;
    PowerSchedule schedule;
    std::vector<double> grid;  ///< slot boundaries used
    double quantum = 0.0;
};

/// Exhaustive DP over (slot, cumulative energy in quanta of total/Q). Slots are
/// a uniform M-grid refined with every arrival instant, and the energy spent by
/// the end of a slot may not exceed what had arrived by its start, so every
/// DP path is feasible and the value is a lower bound on the optimum.
DpResult dp_single_hop(const EnergyArrivalProfile& profile, const RateFunction& rate, double horizon,
                       std::size_t slots, std::size_t quanta);

/// Same DP with the extra cap "cumulative bits at a slot end <= bit_arrivals
/// just before that instant". The grid also contains the curve's breakpoints.
DpResult dp_relay_forward(const PiecewiseLinearCurve& bit_arrivals,
                          const EnergyArrivalProfile& profile, const RateFunction& rate,
                          double horizon, std::size_t slots, std::size_t quanta);

struct GridSearchResult {
    double best_switch_time = 0.0;
    double bits = 0.0;
    double error_bound = 0.0;
};

/// Half-duplex "source first, relay after" search over t = i T / n,
/// i = 1..n-1, maximising min(source Max-Bit on [0, t], relay capacity from t).
/// Also covers multi-packet sources, where it carries no optimality claim.
GridSearchResult grid_half_duplex(const Scenario& scenario, std::size_t grid_points);

}  // namespace ehrelay::oracle
