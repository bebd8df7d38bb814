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

namespace ehrelay {

/// AWGN rate map r(p) = 1/2 log_b(1 + h p) and its inverse.
///
/// With the default base 2 the unit of r is bits per second per unit
/// bandwidth; every algorithm in the library is base independent.
class RateFunction {
public:
    RateFunction() : RateFunction(1.0) {}
    explicit RateFunction(double gain, double log_base = 2.0);

    [[nodiscard]] double gain() const noexcept { return gain_; }
    [[nodiscard]] double log_base() const noexcept { return log_base_; }

    [[nodiscard]] double rate(double power) const noexcept;
    /// Inverse map g(rho) = (b^{2 rho} - 1) / h.
    [[nodiscard]] double power_for_rate(double rate) const noexcept;

    /// r'(p).
    [[nodiscard]] double slope(double power) const noexcept;
    /// g'(rho) = 1 / r'(g(rho)).
    [[nodiscard]] double inverse_slope(double rate) const noexcept;
    /// sup |r''| over p >= 0, attained at p = 0.
    [[nodiscard]] double max_curvature() const noexcept;

    /// Bits sent by spending `energy` at constant power over `duration`.
    /// Zero duration sends nothing.
    [[nodiscard]] double bits(double energy, double duration) const noexcept;

private:
    double gain_;
    double log_base_;
    double ln_base_;
};

}  // namespace ehrelay
