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

#include "ehrelay/rate_function.hpp"

#include <cmath>
#include <string>

#include "ehrelay/errors.hpp"

namespace ehrelay {

RateFunction::RateFunction(double gain, double log_base)
    : gain_(gain), log_base_(log_base), ln_base_(std::log(log_base)) {
    if (!std::isfinite(gain) || gain <= 0.0) {
        throw ValidationError("channel gain must be positive and finite, got " + std::to_string(gain));
    }
    if (!std::isfinite(log_base) || log_base <= 1.0) {
        throw ValidationError("log base must be finite and > 1, got " + std::to_string(log_base));
    }
}

double RateFunction::rate(double power) const noexcept {
    return 0.5 * std::log1p(gain_ * power) / ln_base_;
}

double RateFunction::power_for_rate(double rate) const noexcept {
    return std::expm1(2.0 * rate * ln_base_) / gain_;
}

double RateFunction::slope(double power) const noexcept {
    return gain_ / (2.0 * ln_base_ * (1.0 + gain_ * power));
}

double RateFunction::inverse_slope(double rate) const noexcept {
    return 2.0 * ln_base_ * std::exp(2.0 * rate * ln_base_) / gain_;
}

double RateFunction::max_curvature() const noexcept {
    return gain_ * gain_ / (2.0 * ln_base_);
}

double RateFunction::bits(double energy, double duration) const noexcept {
    if (duration <= 0.0 || energy <= 0.0) return 0.0;
    return duration * rate(energy / duration);
}

}  // namespace ehrelay
