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

#include "ehrelay/feasibility.hpp"
#include "ehrelay/scenario.hpp"
#include "ehrelay/solution.hpp"

namespace ehrelay {

/// Full-duplex relay: the source runs Max-Bit on its own profile and the relay
/// forwards the resulting bit-arrival curve as fast as its energy allows.
TwoHopSolution solve_full_duplex(const Scenario& scenario, double tolerance = kDefaultTolerance);

/// Bits delivered when the source follows `source_schedule` instead of Max-Bit
/// and the relay forwards optimally.
double delivered_bits_for_source(const PowerSchedule& source_schedule, const Scenario& scenario);

}  // namespace ehrelay
