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

#include "ehrelay/curve.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ehrelay/errors.hpp"

namespace ehrelay {

PiecewiseLinearCurve::PiecewiseLinearCurve(std::vector<CurvePoint> points) : points_(std::move(points)) {
    if (points_.empty()) throw ValidationError("curve needs at least one breakpoint");
    if (points_.front().x != 0.0) throw ValidationError("curve must start at x = 0");
    if (points_.front().y < 0.0) throw ValidationError("curve must start at y >= 0");
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const auto& prev = points_[i - 1];
        const auto& cur = points_[i];
        if (!std::isfinite(cur.x) || !std::isfinite(cur.y)) {
            throw ValidationError("curve breakpoint is not finite");
        }
        if (cur.x < prev.x || cur.y < prev.y) {
            std::ostringstream msg;
            msg << "curve breakpoint " << i << " (" << cur.x << ", " << cur.y
                << ") is not non-decreasing";
            throw ValidationError(msg.str());
        }
        if (i >= 2 && cur.x == prev.x && points_[i - 2].x == prev.x) {
            throw ValidationError("curve has more than two breakpoints at one abscissa");
        }
    }
}

namespace {

double interpolate(const CurvePoint& a, const CurvePoint& b, double x) noexcept {
    if (x >= b.x) return b.y;
    if (x <= a.x) return a.y;
    return a.y + (b.y - a.y) * ((x - a.x) / (b.x - a.x));
}

}  // namespace

double PiecewiseLinearCurve::operator()(double x) const noexcept {
    auto it = std::upper_bound(points_.begin(), points_.end(), x,
                               [](double v, const CurvePoint& p) { return v < p.x; });
    if (it == points_.begin()) return points_.front().y;
    if (it == points_.end()) return points_.back().y;
    return interpolate(*(it - 1), *it, x);
}

double PiecewiseLinearCurve::left_limit(double x) const noexcept {
    auto it = std::lower_bound(points_.begin(), points_.end(), x,
                               [](const CurvePoint& p, double v) { return p.x < v; });
    if (it == points_.begin()) return points_.front().y;
    if (it == points_.end()) return points_.back().y;
    return interpolate(*(it - 1), *it, x);
}

std::vector<double> PiecewiseLinearCurve::knots() const {
    std::vector<double> out;
    for (const auto& p : points_) {
        if (out.empty() || out.back() != p.x) out.push_back(p.x);
    }
    return out;
}

}  // namespace ehrelay
