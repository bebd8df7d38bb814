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

#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>

#include "ehrelay/scenario.hpp"

namespace ehrelay::cli {

enum ExitCode : int {
    kSuccess = 0,
    kUsage = 1,
    kValidation = 2,
    kUnsupported = 3,  ///< also infeasible output or a failed oracle check
};

/// Full command line (without argv[0]).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err);

struct OracleCheckOptions {
    std::size_t slots = 20;
    std::size_t quanta = 1000;
    /// Added to every solver value before comparison; a test hook for the
    /// negative control.
    double solver_bias = 0.0;
};

struct OracleCheckOutcome {
    std::size_t checks = 0;
    std::size_t passed = 0;
    [[nodiscard]] bool ok() const noexcept { return checks == passed; }
};

/// Runs every oracle that applies to the scenario and prints one line per
/// comparison. Throws UnsupportedModeError for half-duplex multi-packet sources.
OracleCheckOutcome oracle_check(const Scenario& scenario, const OracleCheckOptions& options, std::ostream& out);

}  // namespace ehrelay::cli
