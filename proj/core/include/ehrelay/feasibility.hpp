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

#include <string_view>
#include <vector>

#include "ehrelay/power_schedule.hpp"
#include "ehrelay/scenario.hpp"

namespace ehrelay {

inline constexpr double kDefaultTolerance = 1e-9;

enum class ConstraintKind { SourceEnergy, RelayEnergy, DataCausality, HalfDuplexOverlap };

std::string_view to_string(ConstraintKind kind) noexcept;

struct Violation {
    ConstraintKind kind;
    double instant;
    double magnitude;  ///< how far past the tolerance-free bound, > 0
};

struct FeasibilityReport {
    bool feasible = true;
    std::vector<Violation> violations;

    // Minimum over checkpoints. Energy slack at an arrival instant is taken
    // against the left limit A(t-).
    double min_source_energy_slack = 0.0;
    double min_relay_energy_slack = 0.0;
    double min_data_slack = 0.0;

    // Slack at the horizon T.
    double terminal_source_energy_slack = 0.0;
    double terminal_relay_energy_slack = 0.0;
    double terminal_data_slack = 0.0;
};

/// Checks the two-hop feasibility set: energy causality at both nodes, data
/// causality at the relay, and (half-duplex) P_s(t) * P_r(t) = 0.
///
/// All curves are piecewise linear between the merged grid of segment
/// boundaries and arrival instants, so evaluating at the grid points and
/// segment midpoints is exact. Throws std::domain_error if the schedule
/// horizons differ from each other or from the scenario.
FeasibilityReport check_feasibility(const PowerSchedule& source_schedule,
                                    const PowerSchedule& relay_schedule,
                                    const Scenario& scenario,
                                    double tolerance = kDefaultTolerance);

}  // namespace ehrelay
