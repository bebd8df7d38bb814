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
#include <ostream>
#include <string>
#include <vector>

#include "ehrelay/scenario.hpp"
#include "ehrelay/solution.hpp"

namespace ehrelay::cli {

/// 12 significant digits, '.' decimal separator.
std::string num(double value);

struct SweepRow {
    double energy;
    double bits;
    double switch_time;
    std::size_t segment_index;
};

/// Half-duplex sweep over source energies E_k = E_min + k (E_max - E_min) / (steps - 1).
/// Points are solved concurrently; rows come back ordered by E.
std::vector<SweepRow> sweep(const Scenario& scenario, double e_min, double e_max, std::size_t steps,
                            std::size_t threads = 0);

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out);

/// Cumulative energy and bit curves of both nodes at every schedule breakpoint
/// and arrival instant.
void write_curves_csv(const TwoHopSolution& solution, const Scenario& scenario, std::ostream& out);

void print_solution(const TwoHopSolution& solution, const Scenario& scenario, std::ostream& out);

}  // namespace ehrelay::cli
