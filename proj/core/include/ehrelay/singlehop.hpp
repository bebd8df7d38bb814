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

#include <vector>

#include "ehrelay/curve.hpp"
#include "ehrelay/energy_profile.hpp"
#include "ehrelay/power_schedule.hpp"
#include "ehrelay/rate_function.hpp"

namespace ehrelay {

enum class TightConstraint : unsigned { None = 0, Energy = 1, Data = 2, Both = 3 };

/// End point of a constant-power run and which constraint it touches there.
struct RunEnd {
    double instant;
    TightConstraint tight;
};

struct MaxBitResult {
    PowerSchedule schedule;
    double total_bits = 0.0;
    PiecewiseLinearCurve bit_curve;
    /// One entry per constant-power run, in time order; the last one is the
    /// deadline.
    std::vector<RunEnd> runs;
};

/// Offline single-hop Max-Bit policy on [start, deadline].
///
/// The consumption curve is the taut string under the arrival staircase: from
/// the current corner, transmit at the smallest average power that any later
/// arrival epoch (or the deadline) allows, and continue from the latest epoch
/// attaining it. Power is non-decreasing and changes only at arrival instants.
///
/// Packets at or before `start` are available at `start`; packets at or after
/// `deadline` are ignored. The schedule is zero on [0, start).
MaxBitResult max_bit_schedule(const EnergyArrivalProfile& profile, const RateFunction& rate,
                              double start, double deadline);

/// Maximum bits a node can forward by `deadline` when its cumulative sent bits
/// must stay below `bit_arrivals` and its energy below the arrival staircase.
///
/// Greedy generalisation of the taut string: from the current state, the run
/// rate is the minimum over future grid epochs (curve breakpoints, arrival
/// instants, deadline) of the constant rate that keeps both the data line and
/// the energy line feasible up to that epoch. Rates come out non-decreasing and
/// change only where a constraint is tight, which makes the result a KKT point
/// of the (convex) rate-variable program; see verify_forwarding_kkt().
MaxBitResult forward_max_bits(const PiecewiseLinearCurve& bit_arrivals,
                              const EnergyArrivalProfile& profile, const RateFunction& rate,
                              double deadline);

struct KktReport {
    double max_primal_violation = 0.0;  ///< worst energy or data overshoot
    double min_dual_residual = 0.0;     ///< most negative multiplier increment
    double max_complementarity = 0.0;   ///< worst slack where a multiplier was placed
    bool terminal_tight = false;        ///< energy exhausted or data tight at deadline
    bool ok = false;
};

/// Builds Lagrange multipliers for a forwarding schedule run by run from the
/// deadline backwards and reports primal feasibility, dual sign and
/// complementary slackness.
KktReport verify_forwarding_kkt(const MaxBitResult& result, const PiecewiseLinearCurve& bit_arrivals,
                                const EnergyArrivalProfile& profile, const RateFunction& rate,
                                double deadline, double tolerance = 1e-9);

}  // namespace ehrelay
