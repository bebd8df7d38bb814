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

namespace ehrelay {

struct CurvePoint {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const CurvePoint&, const CurvePoint&) = default;
};

/// Continuous-or-stepped non-decreasing curve through breakpoints, linear in
/// between. Used for cumulative bits and cumulative energy.
///
/// x must start at 0 and be non-decreasing; two consecutive points may share an
/// x to encode an upward jump (e.g. a burst of bits arriving at once). At a jump
/// the curve is right-continuous; left_limit() gives the value just before.
/// Past the last breakpoint the curve stays flat.
class PiecewiseLinearCurve {
public:
    PiecewiseLinearCurve() : points_{{0.0, 0.0}} {}
    explicit PiecewiseLinearCurve(std::vector<CurvePoint> points);

    [[nodiscard]] std::span<const CurvePoint> points() const noexcept { return points_; }
    [[nodiscard]] double x_end() const noexcept { return points_.back().x; }
    [[nodiscard]] double final_value() const noexcept { return points_.back().y; }

    [[nodiscard]] double operator()(double x) const noexcept;
    [[nodiscard]] double left_limit(double x) const noexcept;

    /// Distinct breakpoint abscissae.
    [[nodiscard]] std::vector<double> knots() const;

private:
    std::vector<CurvePoint> points_;
};

}  // namespace ehrelay
