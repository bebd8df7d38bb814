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

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ehrelay/scenario.hpp"

namespace ehrelay {

/// Syntax or schema error in a scenario document. what() is formatted as
/// "<source>:<line>: <message>".
class ScenarioParseError : public std::runtime_error {
public:
    ScenarioParseError(std::string source, std::size_t line, const std::string& message);

    [[nodiscard]] const std::string& source() const noexcept { return source_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }

private:
    std::string source_;
    std::size_t line_;
};

/// Parses a scenario JSON document:
///
///     {
///       "T": 11,
///       "mode": "half",              // "full" | "half" (or "full-duplex" / "half-duplex")
///       "log_base": 2,               // optional, default 2
///       "h_s": 1, "h_r": 1,
///       "source": {"arrivals": [{"t": 0, "E": 10}]},
///       "relay":  {"arrivals": [{"t": 0, "E": 5}, {"t": 7, "E": 5}, {"t": 10, "E": 6}]}
///     }
///
/// `source_name` only labels error messages.
Scenario parse_scenario(std::string_view text, std::string_view source_name = "<scenario>");
Scenario load_scenario(const std::filesystem::path& path);

std::string scenario_to_json(const Scenario& scenario);

}  // namespace ehrelay
