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

#include "ehrelay/energy_profile.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "ehrelay/errors.hpp"

namespace ehrelay {

EnergyArrivalProfile::EnergyArrivalProfile(std::vector<EnergyArrival> arrivals)
    : arrivals_(std::move(arrivals)) {
    for (std::size_t i = 0; i < arrivals_.size(); ++i) {
        const auto& a = arrivals_[i];
        if (!std::isfinite(a.instant) || !std::isfinite(a.amount)) {
            std::ostringstream msg;
            msg << "arrival " << i << " has a non-finite field";
            throw ValidationError(msg.str());
        }
        if (a.instant < 0.0) {
            std::ostringstream msg;
            msg << "arrival " << i << " instant " << a.instant << " is negative";
            throw ValidationError(msg.str());
        }
        if (a.amount < 0.0) {
            std::ostringstream msg;
            msg << "arrival " << i << " amount " << a.amount << " is negative";
            throw ValidationError(msg.str());
        }
        if (i > 0 && a.instant < arrivals_[i - 1].instant) {
            std::ostringstream msg;
            msg << "arrival " << i << " instant " << a.instant << " precedes arrival " << i - 1
                << " instant " << arrivals_[i - 1].instant;
            throw ValidationError(msg.str());
        }
    }
}

double EnergyArrivalProfile::total() const noexcept {
    double sum = 0.0;
    for (const auto& a : arrivals_) sum += a.amount;
    return sum;
}

double EnergyArrivalProfile::cumulative(double t) const noexcept {
    double sum = 0.0;
    for (const auto& a : arrivals_) {
        if (a.instant > t) break;
        sum += a.amount;
    }
    return sum;
}

double EnergyArrivalProfile::cumulative_before(double t) const noexcept {
    double sum = 0.0;
    for (const auto& a : arrivals_) {
        if (a.instant >= t) break;
        sum += a.amount;
    }
    return sum;
}

std::vector<double> EnergyArrivalProfile::instants() const {
    std::vector<double> out;
    out.reserve(arrivals_.size());
    for (const auto& a : arrivals_) {
        if (out.empty() || out.back() != a.instant) out.push_back(a.instant);
    }
    return out;
}

EnergyArrivalProfile EnergyArrivalProfile::lumped_at(double t) const {
    std::vector<EnergyArrival> out;
    double banked = 0.0;
    bool any_banked = false;
    for (const auto& a : arrivals_) {
        if (a.instant <= t) {
            banked += a.amount;
            any_banked = true;
        } else {
            if (any_banked) {
                out.push_back({t, banked});
                any_banked = false;
            }
            out.push_back(a);
        }
    }
    if (any_banked) out.push_back({t, banked});
    return EnergyArrivalProfile(std::move(out));
}

double cumulative_arrivals(const EnergyArrivalProfile& profile, double t, double horizon) {
    if (!(t >= 0.0 && t <= horizon)) {
        std::ostringstream msg;
        msg << "time " << t << " outside [0, " << horizon << "]";
        throw std::domain_error(msg.str());
    }
    return profile.cumulative(t);
}

}  // namespace ehrelay
