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

#include "cli/commands.hpp"

#include <cmath>
#include <fstream>
#include <random>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "cli/report.hpp"
#include "ehrelay/errors.hpp"
#include "ehrelay/fullduplex.hpp"
#include "ehrelay/fuzz.hpp"
#include "ehrelay/halfduplex.hpp"
#include "ehrelay/oracle.hpp"
#include "ehrelay/scenario_io.hpp"
#include "ehrelay/singlehop.hpp"

namespace ehrelay::cli {

namespace {

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SweepSpec {
    double e_min;
    double e_max;
    std::size_t steps;
};

SweepSpec parse_sweep(const std::string& text) {
    const auto a = text.find(':');
    const auto b = a == std::string::npos ? std::string::npos : text.find(':', a + 1);
    if (b == std::string::npos) throw UsageError("--sweep expects E_MIN:E_MAX:STEPS, got '" + text + "'");
    SweepSpec spec{};
    try {
        spec.e_min = std::stod(text.substr(0, a));
        spec.e_max = std::stod(text.substr(a + 1, b - a - 1));
        const long steps = std::stol(text.substr(b + 1));
        if (steps < 2) throw UsageError("--sweep needs STEPS >= 2");
        spec.steps = static_cast<std::size_t>(steps);
    } catch (const std::logic_error&) {
        throw UsageError("--sweep expects E_MIN:E_MAX:STEPS, got '" + text + "'");
    }
    if (!(spec.e_min > 0.0)) throw UsageError("--sweep needs E_MIN > 0");
    if (!(spec.e_max >= spec.e_min)) throw UsageError("--sweep needs E_MAX >= E_MIN");
    return spec;
}

std::pair<std::size_t, std::size_t> parse_resolution(const std::string& text) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--oracle expects M,Q, got '" + text + "'");
    long m = 0;
    long q = 0;
    try {
        m = std::stol(text.substr(0, comma));
        q = std::stol(text.substr(comma + 1));
    } catch (const std::logic_error&) {
        throw UsageError("--oracle expects M,Q, got '" + text + "'");
    }
    if (m < 2 || q < 2) throw UsageError("--oracle needs M >= 2 and Q >= 2");
    if (static_cast<std::size_t>(m) > oracle::kMaxSlots || static_cast<std::size_t>(q) > oracle::kMaxQuanta) {
        std::ostringstream msg;
        msg << "--oracle " << m << "," << q << " exceeds the desk-scale caps M <= " << oracle::kMaxSlots
            << ", Q <= " << oracle::kMaxQuanta
            << " (the DP costs O(M Q^2)); coarse slots with fine quanta, e.g. --oracle 20,1000, are usually tighter";
        throw UsageError(msg.str());
    }
    return {static_cast<std::size_t>(m), static_cast<std::size_t>(q)};
}

Scenario load_with_mode(const std::string& path, const std::string& mode) {
    Scenario s = load_scenario(path);
    if (mode == "full") s.mode = RelayMode::FullDuplex;
    if (mode == "half") s.mode = RelayMode::HalfDuplex;
    return s;
}

// Relay forwards only after t: all source bits appear at t as a step.
TwoHopSolution approximate_half_duplex(const Scenario& scenario, std::size_t grid_points, double tol,
                                       std::ostream& out) {
    const auto grid = oracle::grid_half_duplex(scenario, grid_points);
    const double t = grid.best_switch_time;
    auto source = max_bit_schedule(scenario.source, scenario.source_rate, 0.0, t);
    std::vector<PowerSegment> segments(source.schedule.segments().begin(), source.schedule.segments().end());
    segments.push_back({t, scenario.horizon, 0.0});
    PowerSchedule source_schedule(std::move(segments), scenario.horizon);

    const PiecewiseLinearCurve arrivals({{0.0, 0.0}, {t, 0.0}, {t, source.total_bits}, {scenario.horizon, source.total_bits}});
    auto relay = forward_max_bits(arrivals, scenario.relay, scenario.relay_rate, scenario.horizon);

    TwoHopSolution solution;
    solution.delivered_bits = relay.total_bits;
    solution.switch_time = t;
    solution.source_bits = source_schedule.bit_curve(scenario.source_rate);
    solution.relay_bits = relay.bit_curve;
    solution.source_schedule = std::move(source_schedule);
    solution.relay_schedule = std::move(relay.schedule);
    solution.feasibility = check_feasibility(solution.source_schedule, solution.relay_schedule, scenario, tol);
    out << "approximate: grid_half_duplex over " << grid_points << " switch times, grid error bound "
        << num(grid.error_bound) << " bits\n";
    return solution;
}

int cmd_solve(const std::string& path, const std::string& mode, double tol, const std::string& curves,
              bool approx, std::size_t grid_points, std::ostream& out) {
    const Scenario scenario = load_with_mode(path, mode);
    TwoHopSolution solution;
    if (scenario.mode == RelayMode::FullDuplex) {
        solution = solve_full_duplex(scenario, tol);
    } else if (approx) {
        solution = approximate_half_duplex(scenario, grid_points, tol, out);
    } else {
        HalfDuplexOptions options;
        options.feasibility_tolerance = tol;
        solution = solve_half_duplex_single_packet(scenario, options);
    }
    print_solution(solution, scenario, out);
    if (!curves.empty()) {
        std::ofstream file(curves);
        if (!file) throw UsageError("cannot write " + curves);
        write_curves_csv(solution, scenario, file);
    }
    return solution.feasibility.feasible ? kSuccess : kUnsupported;
}

int cmd_sweep(const std::string& path, const std::string& sweep_text, const std::string& out_path,
              std::size_t threads, std::ostream& out) {
    const auto spec = parse_sweep(sweep_text);
    Scenario scenario = load_scenario(path);
    scenario.mode = RelayMode::HalfDuplex;
    const auto rows = sweep(scenario, spec.e_min, spec.e_max, spec.steps, threads);
    if (out_path.empty() || out_path == "-") {
        write_sweep_csv(rows, out);
    } else {
        std::ofstream file(out_path);
        if (!file) throw UsageError("cannot write " + out_path);
        write_sweep_csv(rows, file);
        out << "wrote " << rows.size() << " rows to " << out_path << '\n';
    }
    return kSuccess;
}

int cmd_breakpoints(const std::string& path, std::ostream& out) {
    const Scenario scenario = load_scenario(path);
    const auto chain = construct_breakpoints(scenario.relay, scenario.horizon);
    out << "i,t_tilde,anchor_t,anchor_energy,touch_t,touch_energy\n";
    for (std::size_t i = 0; i < chain.breakpoints.size(); ++i) {
        const auto& a = chain.corners[chain.anchors[i]];
        const auto& c = chain.corners[chain.touches[i]];
        out << i + 1 << ',' << num(chain.breakpoints[i]) << ',' << num(a.x) << ',' << num(a.y) << ','
            << num(c.x) << ',' << num(c.y) << '\n';
    }
    return kSuccess;
}

int cmd_oracle_check(const std::string& path, const std::string& mode, const std::string& resolution,
                     std::optional<std::uint64_t> seed, std::size_t fuzz_count, double bias, std::ostream& out) {
    const auto [slots, quanta] = parse_resolution(resolution);
    OracleCheckOptions options{slots, quanta, bias};

    if (!path.empty()) {
        const Scenario scenario = load_with_mode(path, mode);
        const auto outcome = oracle_check(scenario, options, out);
        out << (outcome.ok() ? "PASS" : "FAIL") << ' ' << outcome.passed << '/' << outcome.checks << '\n';
        if (!outcome.ok()) return kUnsupported;
        if (!seed) return kSuccess;
    } else if (!seed) {
        throw UsageError("oracle-check needs --scenario or --seed");
    }

    std::mt19937_64 rng(*seed);
    std::size_t passed = 0;
    std::ostringstream details;
    for (std::size_t i = 0; i < fuzz_count; ++i) {
        const Scenario scenario = i % 2 == 0 ? fuzz::random_scenario(rng, RelayMode::FullDuplex)
                                             : fuzz::random_single_packet_scenario(rng);
        details << "# instance " << i << " (" << to_string(scenario.mode) << ")\n";
        if (oracle_check(scenario, options, details).ok()) ++passed;
    }
    out << details.str();
    out << "fuzz: " << passed << '/' << fuzz_count << " PASS\n";
    return passed == fuzz_count ? kSuccess : kUnsupported;
}

void compare(const char* label, double solver, double oracle_value, double bound, double bias,
             OracleCheckOutcome& outcome, std::ostream& out) {
    const double value = solver + bias;
    const bool pass = value >= oracle_value - 1e-9 && value - oracle_value <= bound;
    ++outcome.checks;
    if (pass) ++outcome.passed;
    out << label << ": solver=" << num(value) << " oracle=" << num(oracle_value) << " bound=" << num(bound) << ' '
        << (pass ? "PASS" : "FAIL") << '\n';
}

}  // namespace

OracleCheckOutcome oracle_check(const Scenario& scenario, const OracleCheckOptions& options, std::ostream& out) {
    scenario.validate();
    OracleCheckOutcome outcome;
    const double horizon = scenario.horizon;
    if (scenario.mode == RelayMode::FullDuplex) {
        const auto source = max_bit_schedule(scenario.source, scenario.source_rate, 0.0, horizon);
        const auto dp_source =
            oracle::dp_single_hop(scenario.source, scenario.source_rate, horizon, options.slots, options.quanta);
        compare("max_bit_schedule", source.total_bits, dp_source.bits, dp_source.error_bound, options.solver_bias,
                outcome, out);

        const auto relay = forward_max_bits(source.bit_curve, scenario.relay, scenario.relay_rate, horizon);
        const auto dp_relay = oracle::dp_relay_forward(source.bit_curve, scenario.relay, scenario.relay_rate,
                                                       horizon, options.slots, options.quanta);
        compare("forward_max_bits", relay.total_bits, dp_relay.bits, dp_relay.error_bound, options.solver_bias,
                outcome, out);
    } else {
        const auto solution = solve_half_duplex_single_packet(scenario);
        const auto grid = oracle::grid_half_duplex(scenario, std::max<std::size_t>(options.slots, 2) * 50);
        compare("solve_half_duplex_single_packet", solution.delivered_bits, grid.bits, grid.error_bound,
                options.solver_bias, outcome, out);
    }
    return outcome;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"ehrelay: offline-optimal two-hop transmission with energy-harvesting source and relay", "ehrelay"};
    app.require_subcommand(1);

    std::string scenario_path;
    std::string mode;
    double tol = 1e-9;
    std::string curves;
    bool approx = false;
    std::size_t grid_points = 2000;
    std::string sweep_text;
    std::string out_path;
    std::size_t threads = 0;
    std::string resolution = "20,1000";
    std::optional<std::uint64_t> seed;
    std::size_t fuzz_count = 100;
    double bias = 0.0;

    auto* solve = app.add_subcommand("solve", "Solve a scenario and print the optimal schedules");
    solve->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    solve->add_option("--mode", mode, "Override the scenario mode")->check(CLI::IsMember({"full", "half"}));
    solve->add_option("--tol", tol, "Feasibility tolerance")->check(CLI::PositiveNumber);
    solve->add_option("--curves", curves, "Write cumulative energy/bit curves to this CSV");
    solve->add_flag("--approx", approx, "Half-duplex: use the grid_half_duplex search (multi-packet sources)");
    solve->add_option("--grid", grid_points, "Switch-time grid size for --approx")->check(CLI::Range(2, 1000000));

    auto* sweep_cmd = app.add_subcommand("sweep", "Half-duplex delivered bits versus source energy (CSV)");
    sweep_cmd->add_option("--scenario", scenario_path, "Scenario JSON file (relay profile, T, gains)")->required();
    sweep_cmd->add_option("--sweep", sweep_text, "E_MIN:E_MAX:STEPS")->required();
    sweep_cmd->add_option("--out", out_path, "Output CSV (default stdout)");
    sweep_cmd->add_option("--threads", threads, "Worker threads (default: hardware concurrency)");

    auto* check = app.add_subcommand("oracle-check", "Compare solvers against brute-force oracles");
    check->add_option("--scenario", scenario_path, "Scenario JSON file");
    check->add_option("--mode", mode, "Override the scenario mode")->check(CLI::IsMember({"full", "half"}));
    check->add_option("--oracle", resolution, "DP resolution M,Q (slots, energy quanta)");
    check->add_option("--seed", seed, "Also run a fuzzed batch with this seed");
    check->add_option("--fuzz", fuzz_count, "Fuzzed batch size")->check(CLI::Range(1, 100000));
    check->add_option("--inject-bias", bias, "Shift solver values (negative-control hook)")->group("");

    auto* bp = app.add_subcommand("breakpoints", "Print the relay breakpoint chain");
    bp->add_option("--scenario", scenario_path, "Scenario JSON file")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kUsage;
    }

    try {
        if (*solve) return cmd_solve(scenario_path, mode, tol, curves, approx, grid_points, out);
        if (*sweep_cmd) return cmd_sweep(scenario_path, sweep_text, out_path, threads, out);
        if (*check) return cmd_oracle_check(scenario_path, mode, resolution, seed, fuzz_count, bias, out);
        if (*bp) return cmd_breakpoints(scenario_path, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const ScenarioParseError& e) {
        err << e.what() << '\n';
        return kValidation;
    } catch (const ValidationError& e) {
        err << (scenario_path.empty() ? std::string("scenario") : scenario_path) << ": " << e.what() << '\n';
        return kValidation;
    } catch (const UnsupportedModeError& e) {
        err << "unsupported: " << e.what() << '\n';
        return kUnsupported;
    }
    return kUsage;
}

}  // namespace ehrelay::cli
