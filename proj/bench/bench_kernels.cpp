// Copyright 2026 The gagcodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include <random>

#include "gag/reproduce.hpp"

namespace {

using namespace gag;

const JobConfig& gf64() {
    static const JobConfig job = builtin_curve("gf64");
    return job;
}

const JobConfig& gf49() {
    static const JobConfig job = builtin_curve("gf49");
    return job;
}

const GagCodeSpec& big_spec() {
    static const GagCodeSpec spec = build_spec(gf64(), Divisor::at_infinity(*gf64().curve, 45), 256, 12);
    return spec;
}

Matrix random_code(std::size_t k, std::size_t n) {
    const GaloisField& K = GaloisField::get(7, 2);
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<Code> pick(0, K.size() - 1);
    Matrix M(K, k, n);
    for (auto& x : M.data) x = pick(rng);
    return M;
}

void BM_places_serial(benchmark::State& state) {
    const auto D = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(places_of_degree_serial(*gf49().curve, D));
}

void BM_places_parallel(benchmark::State& state) {
    const auto D = static_cast<unsigned>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(places_of_degree(*gf49().curve, D));
}

void BM_generator_serial(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generator_matrix_serial(big_spec()));
}

void BM_generator_parallel(benchmark::State& state) {
    for (auto _ : state) benchmark::DoNotOptimize(generator_matrix(big_spec()));
}

void BM_min_distance_serial(benchmark::State& state) {
    const Matrix M = random_code(static_cast<std::size_t>(state.range(0)), 40);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce_serial(M));
}

void BM_min_distance_parallel(benchmark::State& state) {
    const Matrix M = random_code(static_cast<std::size_t>(state.range(0)), 40);
    for (auto _ : state) benchmark::DoNotOptimize(min_distance_bruteforce(M));
}

}  // namespace

BENCHMARK(BM_places_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_places_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_generator_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_generator_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_min_distance_serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_min_distance_parallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
