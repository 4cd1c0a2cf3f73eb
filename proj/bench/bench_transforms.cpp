// Copyright 2026 The approxdft Authors.
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

// Serial vs OpenMP batch transforms, dense vs staged kernels, and the
// designer sweep.

#include <random>
#include <string>
#include <vector>

#include "approxdft/batch.hpp"
#include "approxdft/designer.hpp"
#include "approxdft/fixtures.hpp"
#include "approxdft/transform.hpp"
#include "benchmark/benchmark.h"

namespace approxdft {
namespace {

std::vector<ComplexVector> make_batch(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<ComplexVector> v;
  v.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    std::vector<Complex> s(kSize);
    for (auto& x : s) x = {u(rng), u(rng)};
    v.emplace_back(s);
  }
  return v;
}

void BM_Single(benchmark::State& state) {
  const auto method = static_cast<TransformMethod>(state.range(0));
  const auto x = make_batch(1).front();
  for (auto _ : state) benchmark::DoNotOptimize(transform(method, x));
  state.SetLabel(std::string(to_string(method)));
}
BENCHMARK(BM_Single)
    ->Arg(static_cast<int>(TransformMethod::kExactDft))
    ->Arg(static_cast<int>(TransformMethod::kApproxDense))
    ->Arg(static_cast<int>(TransformMethod::kApproxFast));

void BM_Batch(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  const auto method = static_cast<TransformMethod>(state.range(1));
  const auto inputs = make_batch(static_cast<std::size_t>(state.range(2)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(transform_batch(method, inputs, exec));
  }
  state.SetItemsProcessed(state.iterations() * state.range(2));
  state.SetLabel(std::string(exec == Execution::kSerial ? "serial " : "omp ") +
                 std::string(to_string(method)));
}
BENCHMARK(BM_Batch)->ArgsProduct(
    {{static_cast<int>(Execution::kSerial),
      static_cast<int>(Execution::kParallel)},
     {static_cast<int>(TransformMethod::kApproxDense),
      static_cast<int>(TransformMethod::kApproxFast)},
     {1024, 16384}});

void BM_Search(benchmark::State& state) {
  const auto exec = static_cast<Execution>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        search(kDefaultAlphaMin, kDefaultAlphaMax, kDefaultSteps, exec));
  }
  state.SetLabel(exec == Execution::kSerial ? "serial" : "omp");
}
BENCHMARK(BM_Search)
    ->Arg(static_cast<int>(Execution::kSerial))
    ->Arg(static_cast<int>(Execution::kParallel))
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace approxdft

BENCHMARK_MAIN();
