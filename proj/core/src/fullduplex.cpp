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

#include "ehrelay/fullduplex.hpp"

#include <stdexcept>

#include "ehrelay/singlehop.hpp"

namespace ehrelay {

TwoHopSolution solve_full_duplex(const Scenario& scenario, double tolerance) {
    scenario.validate();
    if (scenario.mode != RelayMode::FullDuplex) {
        throw std::invalid_argument("solve_full_duplex called on a half-duplex scenario");
    }
    const double horizon = scenario.horizon;
    auto source = max_bit_schedule(scenario.source, scenario.source_rate, 0.0, horizon);
    auto relay = forward_max_bits(source.bit_curve, scenario.relay, scenario.relay_rate, horizon);

    TwoHopSolution solution;
    solution.delivered_bits = relay.total_bits;
    solution.source_bits = source.bit_curve;
    solution.relay_bits = relay.bit_curve;
    solution.source_schedule = std::move(source.schedule);
    solution.relay_schedule = std::move(relay.schedule);
    solution.feasibility =
        check_feasibility(solution.source_schedule, solution.relay_schedule, scenario, tolerance);
    return solution;
}

double delivered_bits_for_source(const PowerSchedule& source_schedule, const Scenario& scenario) {
    const auto arrivals = source_schedule.bit_curve(scenario.source_rate);
    return forward_max_bits(arrivals, scenario.relay, scenario.relay_rate, scenario.horizon).total_bits;
}

}  // namespace ehrelay
