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

#include "ehrelay/halfduplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "ehrelay/errors.hpp"

namespace ehrelay {

namespace {

constexpr double kOrdinateTolerance = 1e-12;

}  // namespace

std::size_t BreakpointChain::first_target(double t) const noexcept {
    // breakpoints[i] is where the line drawn from anchors[i] starts touching
    // touches[i]; for t at or above it, the first target is anchors[i].
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
        if (t >= breakpoints[i]) return anchors[i];
    }
    return touches.empty() ? 0 : touches.back();
}

std::size_t BreakpointChain::segment_index(double t) const noexcept {
    return static_cast<std::size_t>(
        std::count_if(breakpoints.begin(), breakpoints.end(), [t](double b) { return b <= t; }));
}

BreakpointChain construct_breakpoints(const EnergyArrivalProfile& relay_profile, double horizon) {
    BreakpointChain chain;
    const double total = relay_profile.cumulative_before(horizon);
    if (!(total > 0.0)) return chain;

    chain.corners.push_back({0.0, 0.0});
    for (double t : relay_profile.instants()) {
        if (t > 0.0 && t < horizon) chain.corners.push_back({t, relay_profile.cumulative_before(t)});
    }
    chain.corners.push_back({horizon, total});

    std::size_t anchor = chain.corners.size() - 1;
    while (anchor > 0) {
        const auto& a = chain.corners[anchor];
        if (a.y <= 0.0) break;  // anchored on the time axis: nothing earlier matters

        // Steepest line from the anchor to an earlier corner; every other
        // corner then lies on or above it. Ties go to the leftmost corner.
        double best_slope = -std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < anchor; ++k) {
            const auto& c = chain.corners[k];
            best_slope = std::max(best_slope, (a.y - c.y) / (a.x - c.x));
        }
        std::size_t touch = anchor - 1;
        for (std::size_t k = 0; k < anchor; ++k) {
            const auto& c = chain.corners[k];
            const double on_line = a.y - best_slope * (a.x - c.x);
            if (std::abs(on_line - c.y) <= kOrdinateTolerance * std::max(1.0, a.y)) {
                touch = k;
                break;
            }
        }
        const auto& c = chain.corners[touch];
        const double intercept = c.y > 0.0 ? c.x - c.y / best_slope : c.x;
        chain.breakpoints.push_back(std::max(0.0, intercept));
        chain.anchors.push_back(anchor);
        chain.touches.push_back(touch);
        anchor = touch;
    }
    return chain;
}

MaxBitResult relay_capacity_schedule(const EnergyArrivalProfile& relay_profile, const RateFunction& rate,
                                     double t_start, double horizon) {
    return max_bit_schedule(relay_profile.lumped_at(t_start), rate, t_start, horizon);
}

double relay_capacity(const EnergyArrivalProfile& relay_profile, const RateFunction& rate, double t_start,
                      double horizon) {
    if (t_start >= horizon) return 0.0;
    return relay_capacity_schedule(relay_profile, rate, std::max(0.0, t_start), horizon).total_bits;
}

double source_bits(double energy, const RateFunction& rate, double duration) {
    return rate.bits(energy, duration);
}

TwoHopSolution solve_half_duplex_single_packet(const Scenario& scenario, const HalfDuplexOptions& options) {
    scenario.validate();
    if (scenario.mode != RelayMode::HalfDuplex) {
        throw std::invalid_argument("solve_half_duplex_single_packet called on a full-duplex scenario");
    }
    double energy = 0.0;
    for (const auto& a : scenario.source.arrivals()) {
        if (a.amount <= 0.0) continue;
        if (a.instant > 0.0) {
            throw UnsupportedModeError(
                "half-duplex exact solver needs a single source packet at t=0; the source harvests at t=" +
                std::to_string(a.instant) + ". Use grid_half_duplex (--approx) instead");
        }
        energy += a.amount;
    }

    const double horizon = scenario.horizon;
    const auto& rs = scenario.source_rate;
    const auto& rr = scenario.relay_rate;
    const double relay_total = scenario.relay.cumulative_before(horizon);

    TwoHopSolution solution;
    if (!(energy > 0.0) || !(relay_total > 0.0)) {
        solution.source_schedule = PowerSchedule::zero(horizon);
        solution.relay_schedule = PowerSchedule::zero(horizon);
        solution.source_bits = solution.source_schedule.bit_curve(rs);
        solution.relay_bits = solution.relay_schedule.bit_curve(rr);
        solution.feasibility = check_feasibility(solution.source_schedule, solution.relay_schedule, scenario,
                                                 options.feasibility_tolerance);
        return solution;
    }

    // Source supply minus relay demand: continuous, increasing from
    // -capacity(0) at t = 0 to +source_bits(T) at t = T.
    auto gap = [&](double t) {
        return source_bits(energy, rs, t) - relay_capacity(scenario.relay, rr, t, horizon);
    };

    const auto chain = construct_breakpoints(scenario.relay, horizon);
    double lo = 0.0;
    double hi = horizon;
    std::optional<double> exact;
    for (double b : chain.breakpoints) {
        const double v = gap(b);
        if (v == 0.0 && b > 0.0) {
            exact = b;
            break;
        }
        if (v < 0.0) {
            lo = b;
            break;
        }
        hi = b;
    }

    // Stop once the bracket is within tol_t and the residual at hi is within
    // the value tolerance r_s(E/t) * tol_t that the time tolerance induces.
    const double tol_t = options.time_tolerance.value_or(1e-9 * horizon);
    if (!exact) {
        double g_hi = gap(hi);
        for (std::size_t it = 0; it < options.max_iterations; ++it) {
            if (hi - lo <= tol_t && g_hi <= rs.rate(energy / hi) * tol_t) break;
            const double mid = 0.5 * (lo + hi);
            if (mid <= lo || mid >= hi) break;
            const double v = gap(mid);
            if (v == 0.0) {
                exact = mid;
                break;
            }
            if (v > 0.0) {
                hi = mid;
                g_hi = v;
            } else {
                lo = mid;
            }
        }
    }
    const double t_star = exact.value_or(hi);

    auto relay = relay_capacity_schedule(scenario.relay, rr, t_star, horizon);
    solution.switch_time = t_star;
    solution.delivered_bits = relay.total_bits;
    solution.source_schedule = PowerSchedule({{0.0, t_star, energy / t_star}, {t_star, horizon, 0.0}}, horizon);
    solution.relay_schedule = std::move(relay.schedule);
    solution.source_bits = solution.source_schedule.bit_curve(rs);
    solution.relay_bits = solution.relay_schedule.bit_curve(rr);
    solution.feasibility = check_feasibility(solution.source_schedule, solution.relay_schedule, scenario,
                                             options.feasibility_tolerance);
    return solution;
}

AlternatingComparison eval_fixed_alternating_schedule(double energy, double slot, const RateFunction& rate) {
    if (!(slot > 0.0) || !(energy >= 0.0)) {
        throw std::domain_error("alternating schedule needs slot > 0 and energy >= 0");
    }
    AlternatingComparison out;
    out.interleaved_bits = rate.bits(energy / 3.0, slot) + rate.bits(2.0 * energy / 3.0, slot);
    out.contiguous_bits = rate.bits(energy, 2.0 * slot);
    return out;
}

}  // namespace ehrelay
