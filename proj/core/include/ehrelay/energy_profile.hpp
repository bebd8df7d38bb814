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

struct EnergyArrival {
    double instant = 0.0;  ///< seconds
    double amount = 0.0;   ///< joules

    friend bool operator==(const EnergyArrival&, const EnergyArrival&) = default;
};

/// Offline-known energy packets, sorted by instant.
///
/// The cumulative curve A(t) counts every packet with instant <= t, so a
/// packet arriving exactly at t can be spent from t on.
class EnergyArrivalProfile {
public:
    EnergyArrivalProfile() = default;
    /// Throws ValidationError on unsorted instants, negative or non-finite
    /// values.
    explicit EnergyArrivalProfile(std::vector<EnergyArrival> arrivals);

    [[nodiscard]] std::span<const EnergyArrival> arrivals() const noexcept { return arrivals_; }
    [[nodiscard]] bool empty() const noexcept { return arrivals_.empty(); }
    [[nodiscard]] double total() const noexcept;

    /// A(t): energy of packets with instant <= t.
    [[nodiscard]] double cumulative(double t) const noexcept;
    /// A(t-): energy of packets with instant < t.
    [[nodiscard]] double cumulative_before(double t) const noexcept;

    /// Distinct packet instants in increasing order.
    [[nodiscard]] std::vector<double> instants() const;

    /// Same energy, with every packet at or before `t` merged into a single
    /// packet at `t`.
    [[nodiscard]] EnergyArrivalProfile lumped_at(double t) const;

private:
    std::vector<EnergyArrival> arrivals_;
};

/// A(t) with the horizon check: throws std::domain_error for t outside [0, T].
double cumulative_arrivals(const EnergyArrivalProfile& profile, double t, double horizon);

}  // namespace ehrelay
