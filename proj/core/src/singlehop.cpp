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

#include "ehrelay/singlehop.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace ehrelay {

namespace {

constexpr double kTieRelative = 1e-12;

bool near_min(double value, double min) {
    return value <= min + kTieRelative * std::max(1.0, std::abs(min));
}

void require_window(double start, double deadline) {
    if (!(start >= 0.0 && start < deadline && std::isfinite(deadline))) {
        std::ostringstream msg;
        msg << "invalid transmission window [" << start << ", " << deadline << "]";
        throw std::domain_error(msg.str());
    }
}

std::vector<double> epochs_after(std::vector<double> candidates, double start, double deadline) {
    candidates.push_back(deadline);
    std::sort(candidates.begin(), candidates.end());
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
    std::erase_if(candidates, [&](double x) { return x <= start || x > deadline; });
    return candidates;
}

MaxBitResult finish(std::vector<PowerSegment> segments, std::vector<RunEnd> runs, double start,
                    double deadline, const RateFunction& rate) {
    if (start > 0.0) segments.insert(segments.begin(), PowerSegment{0.0, start, 0.0});
    MaxBitResult result;
    result.schedule = PowerSchedule(std::move(segments), deadline);
    result.total_bits = result.schedule.total_bits(rate);
    result.bit_curve = result.schedule.bit_curve(rate);
    result.runs = std::move(runs);
    return result;
}

}  // namespace

MaxBitResult max_bit_schedule(const EnergyArrivalProfile& profile, const RateFunction& rate,
                              double start, double deadline) {
    require_window(start, deadline);
    const auto epochs = epochs_after(profile.instants(), start, deadline);

    std::vector<PowerSegment> segments;
    std::vector<RunEnd> runs;
    double now = start;
    double consumed = 0.0;
    std::size_t first = 0;  // epochs before this index are already passed

    while (now < deadline) {
        double min_power = std::numeric_limits<double>::infinity();
        for (std::size_t k = first; k < epochs.size(); ++k) {
            const double x = epochs[k];
            const double p = std::max(0.0, profile.cumulative_before(x) - consumed) / (x - now);
            min_power = std::min(min_power, p);
        }
        std::size_t chosen = first;
        double power = min_power;
        for (std::size_t k = epochs.size(); k-- > first;) {
            const double x = epochs[k];
            const double p = std::max(0.0, profile.cumulative_before(x) - consumed) / (x - now);
            if (near_min(p, min_power)) {
                chosen = k;
                power = p;
                break;
            }
        }
        const double end = epochs[chosen];
        segments.push_back({now, end, power});
        runs.push_back({end, TightConstraint::Energy});
        consumed = std::max(consumed, profile.cumulative_before(end));
        now = end;
        first = chosen + 1;
    }
    return finish(std::move(segments), std::move(runs), start, deadline, rate);
}

MaxBitResult forward_max_bits(const PiecewiseLinearCurve& bit_arrivals,
                              const EnergyArrivalProfile& profile, const RateFunction& rate,
                              double deadline) {
    require_window(0.0, deadline);
    std::vector<double> candidates = profile.instants();
    for (double x : bit_arrivals.knots()) candidates.push_back(x);
    const auto epochs = epochs_after(std::move(candidates), 0.0, deadline);

    std::vector<PowerSegment> segments;
    std::vector<RunEnd> runs;
    double now = 0.0;
    double sent = 0.0;
    double consumed = 0.0;
    std::size_t first = 0;

    struct Candidate {
        double energy_rate;
        double data_rate;
        [[nodiscard]] double rate() const { return std::min(energy_rate, data_rate); }
    };
    auto evaluate = [&](double x) {
        const double len = x - now;
        const double energy = std::max(0.0, profile.cumulative_before(x) - consumed);
        const double data = std::max(0.0, bit_arrivals.left_limit(x) - sent);
        return Candidate{rate.rate(energy / len), data / len};
    };

    while (now < deadline) {
        double min_rate = std::numeric_limits<double>::infinity();
        for (std::size_t k = first; k < epochs.size(); ++k) min_rate = std::min(min_rate, evaluate(epochs[k]).rate());

        std::size_t chosen = first;
        Candidate best{0.0, 0.0};
        for (std::size_t k = epochs.size(); k-- > first;) {
            const auto c = evaluate(epochs[k]);
            if (near_min(c.rate(), min_rate)) {
                chosen = k;
                best = c;
                break;
            }
        }
        const double end = epochs[chosen];
        const double run_rate = best.rate();
        const double power = rate.power_for_rate(run_rate);
        const bool energy_tight = near_min(best.energy_rate, run_rate);
        const bool data_tight = near_min(best.data_rate, run_rate);

        segments.push_back({now, end, power});
        sent += run_rate * (end - now);
        consumed += power * (end - now);
        if (energy_tight) consumed = std::max(consumed, profile.cumulative_before(end));
        if (data_tight) sent = std::max(sent, bit_arrivals.left_limit(end));
        const auto tight = static_cast<TightConstraint>((energy_tight ? 1u : 0u) | (data_tight ? 2u : 0u));
        runs.push_back({end, tight});
        now = end;
        first = chosen + 1;
    }
    return finish(std::move(segments), std::move(runs), 0.0, deadline, rate);
}

KktReport verify_forwarding_kkt(const MaxBitResult& result, const PiecewiseLinearCurve& bit_arrivals,
                                const EnergyArrivalProfile& profile, const RateFunction& rate,
                                double deadline, double tolerance) {
    const auto& schedule = result.schedule;
    KktReport report;

    auto energy_slack = [&](double x) { return profile.cumulative_before(x) - schedule.energy_until(x); };
    auto data_slack = [&](double x) { return bit_arrivals.left_limit(x) - schedule.bits_until(x, rate); };

    std::vector<double> grid = profile.instants();
    for (double x : bit_arrivals.knots()) grid.push_back(x);
    for (double x : schedule.breakpoints()) grid.push_back(x);
    for (double x : grid) {
        if (x <= 0.0 || x > deadline) continue;
        report.max_primal_violation =
            std::max({report.max_primal_violation, -energy_slack(x), -data_slack(x)});
    }
    report.terminal_tight = energy_slack(deadline) <= tolerance || data_slack(deadline) <= tolerance;

    // Piece i runs between consecutive run ends at constant rate rho_i.
    // Stationarity: data_mult + energy_mult * g'(rho_i) = 1, with both
    // multipliers accumulated from the deadline backwards.
    double data_mult = 0.0;
    double energy_mult = 0.0;
    for (std::size_t i = result.runs.size(); i-- > 0;) {
        const double piece_end = result.runs[i].instant;
        const double piece_start = i == 0 ? 0.0 : result.runs[i - 1].instant;
        if (piece_end <= piece_start) continue;
        const double rho = rate.rate(schedule.power_at(0.5 * (piece_start + piece_end)));
        const double gprime = rate.inverse_slope(rho);
        const double residual = 1.0 - data_mult - energy_mult * gprime;
        report.min_dual_residual = std::min(report.min_dual_residual, residual);
        if (residual > kTieRelative) {
            const double es = energy_slack(piece_end);
            const double ds = data_slack(piece_end);
            if (es <= ds) {
                energy_mult += residual / gprime;
                report.max_complementarity = std::max(report.max_complementarity, es);
            } else {
                data_mult += residual;
                report.max_complementarity = std::max(report.max_complementarity, ds);
            }
        }
    }

    report.ok = report.max_primal_violation <= tolerance && report.min_dual_residual >= -tolerance &&
                report.max_complementarity <= tolerance && report.terminal_tight;
    return report;
}

}  // namespace ehrelay
