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

#include "ehrelay/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "ehrelay/halfduplex.hpp"
#include "ehrelay/singlehop.hpp"

namespace ehrelay::oracle {

namespace {

std::vector<double> slot_grid(double horizon, std::size_t slots, std::vector<double> mandatory) {
    std::erase_if(mandatory, [&](double x) { return !(x > 0.0 && x < horizon); });
    mandatory.push_back(0.0);
    mandatory.push_back(horizon);
    std::sort(mandatory.begin(), mandatory.end());
    mandatory.erase(std::unique(mandatory.begin(), mandatory.end()), mandatory.end());

    const double width = horizon / static_cast<double>(slots);
    std::vector<double> grid = mandatory;
    for (std::size_t i = 1; i < slots; ++i) {
        const double x = width * static_cast<double>(i);
        auto it = std::lower_bound(mandatory.begin(), mandatory.end(), x);
        const double right = it == mandatory.end() ? horizon : *it;
        const double left = it == mandatory.begin() ? 0.0 : *(it - 1);
        if (x - left > 0.25 * width && right - x > 0.25 * width) grid.push_back(x);
    }
    std::sort(grid.begin(), grid.end());
    return grid;
}

void check_resolution(std::size_t slots, std::size_t quanta) {
    if (slots < 2 || quanta < 2) throw std::invalid_argument("oracle needs at least 2 slots and 2 quanta");
}

DpResult run_dp(std::vector<double> grid, const EnergyArrivalProfile& profile, const RateFunction& rate,
                double horizon, std::size_t quanta, const PiecewiseLinearCurve* data_cap) {
    DpResult out;
    const std::size_t slots = grid.size() - 1;
    const double total = profile.cumulative_before(horizon);
    if (!(total > 0.0)) {
        out.schedule = PowerSchedule::zero(horizon);
        out.grid = std::move(grid);
        return out;
    }
    const double q = total / static_cast<double>(quanta);
    constexpr double kNegInf = -std::numeric_limits<double>::infinity();

    std::vector<double> value(quanta + 1, kNegInf);
    std::vector<double> next(quanta + 1, kNegInf);
    std::vector<double> gain(quanta + 1, 0.0);
    std::vector<std::vector<std::uint32_t>> parent(slots, std::vector<std::uint32_t>(quanta + 1, 0));
    value[0] = 0.0;
    std::size_t reachable = 0;  // highest reachable cumulative quanta so far

    for (std::size_t m = 0; m < slots; ++m) {
        const double len = grid[m + 1] - grid[m];
        // Energy spent by the end of the slot is limited by what had arrived
        // at its start; no packet lands strictly inside a slot.
        const auto cap = std::min<std::size_t>(
            quanta, static_cast<std::size_t>(std::floor(profile.cumulative(grid[m]) / q + 1e-9)));
        for (std::size_t k = 0; k <= cap; ++k) gain[k] = len * rate.rate(static_cast<double>(k) * q / len);
        const double bit_cap = data_cap ? data_cap->left_limit(grid[m + 1]) : std::numeric_limits<double>::infinity();

        std::fill(next.begin(), next.end(), kNegInf);
        for (std::size_t e2 = 0; e2 <= cap; ++e2) {
            double best = kNegInf;
            std::uint32_t arg = 0;
            const std::size_t top = std::min(e2, reachable);
            for (std::size_t e1 = 0; e1 <= top; ++e1) {
                const double v = value[e1] + gain[e2 - e1];
                if (v > best) {
                    best = v;
                    arg = static_cast<std::uint32_t>(e1);
                }
            }
            next[e2] = std::min(best, bit_cap);
            parent[m][e2] = arg;
        }
        reachable = std::max(reachable, cap);
        std::swap(value, next);
    }

    std::size_t end_state = 0;
    for (std::size_t e = 0; e <= reachable; ++e) {
        if (value[e] > value[end_state]) end_state = e;
    }

    std::vector<std::size_t> states(slots + 1, 0);
    states[slots] = end_state;
    for (std::size_t m = slots; m-- > 0;) states[m] = parent[m][states[m + 1]];

    std::vector<PowerSegment> segments;
    double cumulative = 0.0;
    for (std::size_t m = 0; m < slots; ++m) {
        const double len = grid[m + 1] - grid[m];
        const double spent = static_cast<double>(states[m + 1] - states[m]) * q;
        double slot_bits = len * rate.rate(spent / len);
        if (data_cap) {
            const double capped = std::min(cumulative + slot_bits, data_cap->left_limit(grid[m + 1]));
            slot_bits = std::max(0.0, capped - cumulative);
        }
        cumulative += slot_bits;
        segments.push_back({grid[m], grid[m + 1], std::min(spent / len, rate.power_for_rate(slot_bits / len))});
    }

    double inverse_lengths = 0.0;
    for (std::size_t m = 0; m < slots; ++m) inverse_lengths += 1.0 / (grid[m + 1] - grid[m]);

    out.bits = value[end_state];
    out.error_bound = q * rate.slope(0.0) + rate.max_curvature() * q * q * inverse_lengths;
    out.schedule = PowerSchedule(std::move(segments), horizon);
    out.grid = std::move(grid);
    out.quantum = q;
    return out;
}

}  // namespace

DpResult dp_single_hop(const EnergyArrivalProfile& profile, const RateFunction& rate, double horizon,
                       std::size_t slots, std::size_t quanta) {
    check_resolution(slots, quanta);
    return run_dp(slot_grid(horizon, slots, profile.instants()), profile, rate, horizon, quanta, nullptr);
}

DpResult dp_relay_forward(const PiecewiseLinearCurve& bit_arrivals, const EnergyArrivalProfile& profile,
                          const RateFunction& rate, double horizon, std::size_t slots, std::size_t quanta) {
    check_resolution(slots, quanta);
    auto mandatory = profile.instants();
    for (double x : bit_arrivals.knots()) mandatory.push_back(x);
    return run_dp(slot_grid(horizon, slots, std::move(mandatory)), profile, rate, horizon, quanta, &bit_arrivals);
}

GridSearchResult grid_half_duplex(const Scenario& scenario, std::size_t grid_points) {
    if (grid_points < 2) throw std::invalid_argument("grid search needs at least 2 grid points");
    const double horizon = scenario.horizon;
    const auto n = grid_points;

    std::vector<double> supply(n + 1, 0.0);
    std::vector<double> capacity(n + 1, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
        const double t = horizon * static_cast<double>(i) / static_cast<double>(n);
        supply[i] = t > 0.0 ? max_bit_schedule(scenario.source, scenario.source_rate, 0.0, t).total_bits : 0.0;
        capacity[i] = relay_capacity(scenario.relay, scenario.relay_rate, t, horizon);
    }

    GridSearchResult out;
    out.bits = -1.0;
    for (std::size_t i = 1; i < n; ++i) {
        const double v = std::min(supply[i], capacity[i]);
        if (v > out.bits) {
            out.bits = v;
            out.best_switch_time = horizon * static_cast<double>(i) / static_cast<double>(n);
        }
    }
    // Supply grows and capacity shrinks with t, so inside a cell the objective
    // is below min(supply at the right end, capacity at the left end).
    double upper = 0.0;
    for (std::size_t i = 0; i < n; ++i) upper = std::max(upper, std::min(supply[i + 1], capacity[i]));
    out.error_bound = std::max(0.0, upper - out.bits);
    return out;
}

}  // namespace ehrelay::oracle
