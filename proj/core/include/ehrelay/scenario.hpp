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

#include <string_view>

#include "ehrelay/energy_profile.hpp"
#include "ehrelay/rate_function.hpp"

namespace ehrelay {

enum class RelayMode { FullDuplex, HalfDuplex };

std::string_view to_string(RelayMode mode) noexcept;

struct Scenario {
    double horizon = 1.0;  ///< deadline T, seconds
    EnergyArrivalProfile source;
    EnergyArrivalProfile relay;
    RateFunction source_rate;
    RateFunction relay_rate;
    RelayMode mode = RelayMode::FullDuplex;

    /// Throws ValidationError if T is not positive or a packet is at or after T.
    void validate() const;
};

}  // namespace ehrelay
