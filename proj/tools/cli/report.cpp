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

#include "cli/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <thread>

#include "ehrelay/halfduplex.hpp"

namespace ehrelay::cli {

std::string num(double value) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", value);
    return buf;
}

std::vector<SweepRow> sweep(const Scenario& scenario, double e_min, double e_max, std::size_t steps,
                            std::size_t threads) {
    std::vector<SweepRow> rows(steps);
    const auto chain = construct_breakpoints(scenario.relay, scenario.horizon);

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < steps; k = next++) {
            const double energy =
                k + 1 == steps ? e_max : e_min + (e_max - e_min) * static_cast<double>(k) / static_cast<double>(steps - 1);
            Scenario s = scenario;
            s.mode = RelayMode::HalfDuplex;
            s.source = EnergyArrivalProfile({{0.0, energy}});
            const auto solution = solve_half_duplex_single_packet(s);
            const double t_star = solution.switch_time.value_or(0.0);
            rows[k] = {energy, solution.delivered_bits, t_star, chain.segment_index(t_star)};
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min(threads, steps);
    std::vector<std::jthread> pool;
    for (std::size_t i = 1; i < threads; ++i) pool.emplace_back(worker);
    worker();
    pool.clear();  // join before rows is moved out
    return rows;
}

void write_sweep_csv(const std::vector<SweepRow>& rows, std::ostream& out) {
    out << "E,B,t_star,segment_index\n";
    for (const auto& r : rows) {
        out << num(r.energy) << ',' << num(r.bits) << ',' << num(r.switch_time) << ',' << r.segment_index << '\n';
    }
}

void write_curves_csv(const TwoHopSolution& solution, const Scenario& scenario, std::ostream& out) {
    std::vector<double> xs = solution.source_schedule.breakpoints();
    for (double x : solution.relay_schedule.breakpoints()) xs.push_back(x);
    for (double x : scenario.source.instants()) xs.push_back(x);
    for (double x : scenario.relay.instants()) xs.push_back(x);
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());

    out << "t,source_energy,source_bits,relay_energy,relay_bits\n";
    for (double x : xs) {
        if (x < 0.0 || x > scenario.horizon) continue;
        out << num(x) << ',' << num(solution.source_schedule.energy_until(x)) << ','
            << num(solution.source_schedule.bits_until(x, scenario.source_rate)) << ','
            << num(solution.relay_schedule.energy_until(x)) << ','
            << num(solution.relay_schedule.bits_until(x, scenario.relay_rate)) << '\n';
    }
}

namespace {

void print_schedule(const char* name, const PowerSchedule& schedule, std::ostream& out) {
    out << name << " schedule:\n";
    for (const auto& seg : schedule.segments()) {
        out << "  [" << num(seg.start) << ", " << num(seg.end) << ")  P = " << num(seg.power) << '\n';
    }
}

}  // namespace

void print_solution(const TwoHopSolution& solution, const Scenario& scenario, std::ostream& out) {
    out << "mode: " << to_string(scenario.mode) << '\n';
    out << "B = " << num(solution.delivered_bits) << " bits\n";
    if (scenario.mode == RelayMode::HalfDuplex) {
        if (solution.switch_time) {
            const auto chain = construct_breakpoints(scenario.relay, scenario.horizon);
            out << "t* = " << num(*solution.switch_time) << '\n';
            out << "segment_index = " << chain.segment_index(*solution.switch_time) << '\n';
        } else {
            out << "t* = undefined (no transmission)\n";
        }
    }
    print_schedule("source", solution.source_schedule, out);
    print_schedule("relay", solution.relay_schedule, out);
    const auto& f = solution.feasibility;
    out << "feasibility: " << (f.feasible ? "ok" : "VIOLATED") << " (min slack: source energy "
        << num(f.min_source_energy_slack) << ", relay energy " << num(f.min_relay_energy_slack) << ", data "
        << num(f.min_data_slack) << ")\n";
    for (const auto& v : f.violations) {
        out << "  " << to_string(v.kind) << " at t=" << num(v.instant) << " by " << num(v.magnitude) << '\n';
    }
}

}  // namespace ehrelay::cli
