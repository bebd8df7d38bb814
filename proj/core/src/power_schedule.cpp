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

#include "ehrelay/power_schedule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ehrelay/errors.hpp"

namespace ehrelay {

namespace {

constexpr double kJoinTolerance = 1e-12;

}  // namespace

PowerSchedule::PowerSchedule(std::vector<PowerSegment> segments, double horizon) : horizon_(horizon) {
    if (!std::isfinite(horizon) || horizon <= 0.0) {
        throw ValidationError("schedule horizon must be positive");
    }
    const double join_tol = kJoinTolerance * std::max(1.0, horizon);
    double cursor = 0.0;
    for (std::size_t i = 0; i < segments.size(); ++i) {
        auto seg = segments[i];
        if (!std::isfinite(seg.power) || seg.power < 0.0) {
            std::ostringstream msg;
            msg << "segment " << i << " has invalid power " << seg.power;
            throw ValidationError(msg.str());
        }
        if (std::abs(seg.start - cursor) > join_tol) {
            std::ostringstream msg;
            msg << "segment " << i << " starts at " << seg.start << ", expected " << cursor;
            throw ValidationError(msg.str());
        }
        seg.start = cursor;
        if (seg.end - seg.start <= 0.0) continue;
        cursor = seg.end;
        segments_.push_back(seg);
    }
    if (std::abs(cursor - horizon) > join_tol) {
        std::ostringstream msg;
        msg << "segments end at " << cursor << ", expected horizon " << horizon;
        throw ValidationError(msg.str());
    }
    if (segments_.empty()) {
        segments_.push_back({0.0, horizon, 0.0});
    } else {
        segments_.back().end = horizon;
    }
}

PowerSchedule PowerSchedule::zero(double horizon) {
    return PowerSchedule({{0.0, horizon, 0.0}}, horizon);
}

double PowerSchedule::power_at(double t) const noexcept {
    for (const auto& seg : segments_) {
        if (t < seg.end) return t >= seg.start ? seg.power : 0.0;
    }
    return segments_.empty() ? 0.0 : segments_.back().power;
}

double PowerSchedule::energy_until(double t) const noexcept {
    double sum = 0.0;
    for (const auto& seg : segments_) {
        if (t <= seg.start) break;
        sum += seg.power * (std::min(t, seg.end) - seg.start);
    }
    return sum;
}

double PowerSchedule::bits_until(double t, const RateFunction& rate) const noexcept {
    double sum = 0.0;
    for (const auto& seg : segments_) {
        if (t <= seg.start) break;
        sum += rate.rate(seg.power) * (std::min(t, seg.end) - seg.start);
    }
    return sum;
}

PiecewiseLinearCurve PowerSchedule::energy_curve() const {
    std::vector<CurvePoint> pts{{0.0, 0.0}};
    double sum = 0.0;
    for (const auto& seg : segments_) {
        sum += seg.power * seg.length();
        pts.push_back({seg.end, sum});
    }
    return PiecewiseLinearCurve(std::move(pts));
}

PiecewiseLinearCurve PowerSchedule::bit_curve(const RateFunction& rate) const {
    std::vector<CurvePoint> pts{{0.0, 0.0}};
    double sum = 0.0;
    for (const auto& seg : segments_) {
        sum += rate.rate(seg.power) * seg.length();
        pts.push_back({seg.end, sum});
    }
    return PiecewiseLinearCurve(std::move(pts));
}

std::vector<double> PowerSchedule::breakpoints() const {
    std::vector<double> out{0.0};
    for (const auto& seg : segments_) out.push_back(seg.end);
    return out;
}

}  // namespace ehrelay
