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

#include <optional>

#include "ehrelay/curve.hpp"
#include "ehrelay/feasibility.hpp"
#include "ehrelay/power_schedule.hpp"

namespace ehrelay {

struct TwoHopSolution {
    double delivered_bits = 0.0;
    PowerSchedule source_schedule;
    PowerSchedule relay_schedule;
    /// Half-duplex only; empty when no transmission takes place.
    std::optional<double> switch_time;
    PiecewiseLinearCurve source_bits;  ///< cumulative bits received by the relay
    PiecewiseLinearCurve relay_bits;   ///< cumulative bits delivered to the destination
    FeasibilityReport feasibility;
};

}  // namespace ehrelay
