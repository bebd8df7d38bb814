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

#include "ehrelay/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ehrelay {

std::string_view to_string(ConstraintKind kind) noexcept {
    switch (kind) {
        case ConstraintKind::SourceEnergy: return "source-energy";
        case ConstraintKind::RelayEnergy: return "relay-energy";
        case ConstraintKind::DataCausality: return "data-causality";
        case ConstraintKind::HalfDuplexOverlap: return "half-duplex-overlap";
    }
    return "unknown";
}

namespace {

// Energy usable up to x: packets strictly before x, except at the origin.
double energy_bound(const EnergyArrivalProfile& profile, double x) {
    return x > 0.0 ? profile.cumulative_before(x) : profile.cumulative(0.0);
}

}  // namespace

FeasibilityReport check_feasibility(const PowerSchedule& source_schedule,
                                    const PowerSchedule& relay_schedule,
                                    const Scenario& scenario,
                                    double tolerance) {
    const double horizon = scenario.horizon;
    const double join_tol = 1e-12 * std::max(1.0, horizon);
    if (std::abs(source_schedule.horizon() - relay_schedule.horizon()) > join_tol ||
        std::abs(source_schedule.horizon() - horizon) > join_tol) {
        std::ostringstream msg;
        msg << "schedule horizons " << source_schedule.horizon() << " and " << relay_schedule.horizon()
            << " do not match scenario T=" << horizon;
        throw std::domain_error(msg.str());
    }

    std::vector<double> grid = source_schedule.breakpoints();
    for (double x : relay_schedule.breakpoints()) grid.push_back(x);
    for (double x : scenario.source.instants()) grid.push_back(x);
    for (double x : scenario.relay.instants()) grid.push_back(x);
    grid.push_back(0.0);
    grid.push_back(horizon);
    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    grid.erase(std::remove_if(grid.begin(), grid.end(), [&](double x) { return x < 0.0 || x > horizon; }),
               grid.end());

    std::vector<double> checkpoints;
    checkpoints.reserve(2 * grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        checkpoints.push_back(grid[i]);
        if (i + 1 < grid.size()) checkpoints.push_back(0.5 * (grid[i] + grid[i + 1]));
    }

    FeasibilityReport report;
    report.min_source_energy_slack = std::numeric_limits<double>::infinity();
    report.min_relay_energy_slack = std::numeric_limits<double>::infinity();
    report.min_data_slack = std::numeric_limits<double>::infinity();

    auto note = [&](ConstraintKind kind, double x, double slack) {
        if (slack < -tolerance) report.violations.push_back({kind, x, -slack});
    };

    for (double x : checkpoints) {
        const double src_slack = energy_bound(scenario.source, x) - source_schedule.energy_until(x);
        const double rel_slack = energy_bound(scenario.relay, x) - relay_schedule.energy_until(x);
        const double data_slack = source_schedule.bits_until(x, scenario.source_rate) -
                                  relay_schedule.bits_until(x, scenario.relay_rate);
        report.min_source_energy_slack = std::min(report.min_source_energy_slack, src_slack);
        report.min_relay_energy_slack = std::min(report.min_relay_energy_slack, rel_slack);
        report.min_data_slack = std::min(report.min_data_slack, data_slack);
        note(ConstraintKind::SourceEnergy, x, src_slack);
        note(ConstraintKind::RelayEnergy, x, rel_slack);
        note(ConstraintKind::DataCausality, x, data_slack);
    }

    if (scenario.mode == RelayMode::HalfDuplex) {
        for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
            const double mid = 0.5 * (grid[i] + grid[i + 1]);
            const double overlap = source_schedule.power_at(mid) * relay_schedule.power_at(mid);
            if (overlap > tolerance) {
                report.violations.push_back({ConstraintKind::HalfDuplexOverlap, mid, overlap});
            }
        }
    }

    report.terminal_source_energy_slack = scenario.source.cumulative(horizon) - source_schedule.total_energy();
    report.terminal_relay_energy_slack = scenario.relay.cumulative(horizon) - relay_schedule.total_energy();
    report.terminal_data_slack =
        source_schedule.total_bits(scenario.source_rate) - relay_schedule.total_bits(scenario.relay_rate);
    report.feasible = report.violations.empty();
    return report;
}

}  // namespace ehrelay
