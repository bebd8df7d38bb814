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

#include <span>
#include <vector>

#include "ehrelay/curve.hpp"
#include "ehrelay/rate_function.hpp"

namespace ehrelay {

struct PowerSegment {
    double start = 0.0;
    double end = 0.0;
    double power = 0.0;  ///< joules per second

    [[nodiscard]] double length() const noexcept { return end - start; }
};

/// Piecewise-constant transmit power covering exactly [0, horizon].
class PowerSchedule {
public:
    PowerSchedule() = default;
    /// Segments must be contiguous from 0 to `horizon` with non-negative power.
    /// Empty segments are dropped.
    PowerSchedule(std::vector<PowerSegment> segments, double horizon);

    static PowerSchedule zero(double horizon);

    [[nodiscard]] double horizon() const noexcept { return horizon_; }
    [[nodiscard]] std::span<const PowerSegment> segments() const noexcept { return segments_; }

    /// Right-continuous power; power_at(horizon) is the last segment's power.
    [[nodiscard]] double power_at(double t) const noexcept;
    [[nodiscard]] double energy_until(double t) const noexcept;
    [[nodiscard]] double bits_until(double t, const RateFunction& rate) const noexcept;
    [[nodiscard]] double total_energy() const noexcept { return energy_until(horizon_); }
    [[nodiscard]] double total_bits(const RateFunction& rate) const noexcept {
        return bits_until(horizon_, rate);
    }

    [[nodiscard]] PiecewiseLinearCurve energy_curve() const;
    [[nodiscard]] PiecewiseLinearCurve bit_curve(const RateFunction& rate) const;

    /// Segment boundaries including 0 and the horizon.
    [[nodiscard]] std::vector<double> breakpoints() const;

private:
    std::vector<PowerSegment> segments_;
    double horizon_ = 0.0;
};

}  // namespace ehrelay
