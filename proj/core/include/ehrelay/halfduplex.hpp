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
#include <optional>
#include <vector>

#include "ehrelay/curve.hpp"
#include "ehrelay/energy_profile.hpp"
#include "ehrelay/rate_function.hpp"
#include "ehrelay/scenario.hpp"
#include "ehrelay/singlehop.hpp"
#include "ehrelay/solution.hpp"

namespace ehrelay {

/// Backward line construction on the relay's cumulative energy staircase.
///
/// Corners are C_1 = (0, 0), C_i = (t_i, A(t_i-)) for every distinct arrival
/// instant t_i > 0, and C_{N+1} = (T, A(T)). Starting from C_{N+1}, the line to
/// the earlier corner with the steepest slope stays on or below the staircase;
/// its x-intercept is the next breakpoint and the leftmost corner on it becomes
/// the next anchor.
struct BreakpointChain {
    std::vector<CurvePoint> corners;
    std::vector<double> breakpoints;       ///< strictly decreasing
    std::vector<std::size_t> anchors;      ///< corner the i-th line is drawn from
    std::vector<std::size_t> touches;      ///< leftmost corner the i-th line touches

    /// Corner the relay's consumption line from (t, 0) heads to first.
    [[nodiscard]] std::size_t first_target(double t) const noexcept;
    /// Number of breakpoints <= t: segments numbered left to right.
    [[nodiscard]] std::size_t segment_index(double t) const noexcept;
};

BreakpointChain construct_breakpoints(const EnergyArrivalProfile& relay_profile, double horizon);

/// Max bits the relay can send on [t_start, T] when it starts with every packet
/// that arrived by t_start. Zero when t_start >= T.
double relay_capacity(const EnergyArrivalProfile& relay_profile, const RateFunction& rate,
                      double t_start, double horizon);
MaxBitResult relay_capacity_schedule(const EnergyArrivalProfile& relay_profile,
                                     const RateFunction& rate, double t_start, double horizon);

/// t * r(E / t); zero at t = 0.
double source_bits(double energy, const RateFunction& rate, double duration);

struct HalfDuplexOptions {
    /// Bisection stops once the bracket is this short and |f(t*)| is within
    /// r_s(E/t*) times it; defaults to 1e-9 * T.
    std::optional<double> time_tolerance;
    std::size_t max_iterations = 200;
    double feasibility_tolerance = 1e-9;
};

/// Half-duplex relay with a single source packet at t = 0: the source sends
/// over [0, t*] at power E / t*, the relay forwards over [t*, T]. t* is where
/// the source supply t r_s(E/t) meets the relay capacity; it is bracketed by
/// walking the breakpoint chain and refined by bisection.
///
/// Throws UnsupportedModeError if the source harvests after t = 0.
TwoHopSolution solve_half_duplex_single_packet(const Scenario& scenario,
                                               const HalfDuplexOptions& options = {});

struct AlternatingComparison {
    double interleaved_bits;  ///< relay forwards in [t,2t) and [4t,5t)
    double contiguous_bits;   ///< source [0,t) + [2t,3t), relay gets 2t
};

/// Two fixed half-duplex schedules over 5 slots with E units at both nodes at
/// t = 0 and identical rate functions on both hops. The interleaved one lets
/// the source use the bit-maximising constant power; the contiguous one sends
/// fewer bits to the relay but delivers more.
AlternatingComparison eval_fixed_alternating_schedule(double energy, double slot,
                                                      const RateFunction& rate);

}  // namespace ehrelay
