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

#include "ehrelay/scenario.hpp"

#include <cmath>
#include <sstream>

#include "ehrelay/errors.hpp"

namespace ehrelay {

std::string_view to_string(RelayMode mode) noexcept {
    return mode == RelayMode::FullDuplex ? "full-duplex" : "half-duplex";
}

namespace {

void check_profile(const EnergyArrivalProfile& profile, double horizon, const char* node) {
    for (std::size_t i = 0; i < profile.arrivals().size(); ++i) {
        const double t = profile.arrivals()[i].instant;
        if (t >= horizon) {
            std::ostringstream msg;
            msg << node << " arrival " << i << " at t=" << t << " is not before T=" << horizon;
            throw ValidationError(msg.str());
        }
    }
}

}  // namespace

void Scenario::validate() const {
    if (!std::isfinite(horizon) || horizon <= 0.0) {
        std::ostringstream msg;
        msg << "horizon T must be positive, got " << horizon;
        throw ValidationError(msg.str());
    }
    check_profile(source, horizon, "source");
    check_profile(relay, horizon, "relay");
}

}  // namespace ehrelay
