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

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "ehrelay/fullduplex.hpp"
#include "ehrelay/fuzz.hpp"
#include "ehrelay/halfduplex.hpp"
#include "ehrelay/oracle.hpp"
#include "ehrelay/singlehop.hpp"

using namespace ehrelay;

namespace {

EnergyArrivalProfile many_packets(std::size_t n, double horizon) {
    std::mt19937_64 rng(n);
    std::uniform_real_distribution<double> amount(0.0, 10.0);
    std::vector<EnergyArrival> a;
    for (std::size_t i = 0; i < n; ++i) a.push_back({horizon * static_cast<double>(i) / static_cast<double>(n), amount(rng)});
    return EnergyArrivalProfile(std::move(a));
}

void BM_MaxBit(benchmark::State& state) {
    const auto profile = many_packets(static_cast<std::size_t>(state.range(0)), 100.0);
    const RateFunction r;
    for (auto _ : state) benchmark::DoNotOptimize(max_bit_schedule(profile, r, 0.0, 100.0).total_bits);
    state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MaxBit)->RangeMultiplier(4)->Range(4, 1024)->Complexity();

void BM_FullDuplex(benchmark::State& state) {
    Scenario s;
    s.horizon = 100.0;
    s.source = many_packets(static_cast<std::size_t>(state.range(0)), 100.0);
    s.relay = many_packets(static_cast<std::size_t>(state.range(0)) + 1, 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_full_duplex(s).delivered_bits);
}
BENCHMARK(BM_FullDuplex)->RangeMultiplier(4)->Range(4, 256);

void BM_HalfDuplex(benchmark::State& state) {
    Scenario s;
    s.horizon = 100.0;
    s.mode = RelayMode::HalfDuplex;
    s.source = EnergyArrivalProfile({{0.0, 50.0}});
    s.relay = many_packets(static_cast<std::size_t>(state.range(0)), 100.0);
    for (auto _ : state) benchmark::DoNotOptimize(solve_half_duplex_single_packet(s).delivered_bits);
}
BENCHMARK(BM_HalfDuplex)->RangeMultiplier(4)->Range(4, 256);

void BM_ExampleSweep(benchmark::State& state) {
    Scenario s;
    s.horizon = 11.0;
    s.mode = RelayMode::HalfDuplex;
    s.relay = EnergyArrivalProfile({{0, 5}, {7, 5}, {10, 6}});
    for (auto _ : state) {
        double total = 0.0;
        for (int k = 0; k < 100; ++k) {
            s.source = EnergyArrivalProfile({{0.0, 0.5 + 0.5 * k}});
            total += solve_half_duplex_single_packet(s).delivered_bits;
        }
        benchmark::DoNotOptimize(total);
    }
}
BENCHMARK(BM_ExampleSweep);

void BM_DpOracle(benchmark::State& state) {
    const EnergyArrivalProfile p({{0, 5}, {7, 5}, {10, 6}});
    const RateFunction r;
    const auto q = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(oracle::dp_single_hop(p, r, 11.0, 11, q).bits);
}
BENCHMARK(BM_DpOracle)->Arg(100)->Arg(400)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
