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

#include "approxdft/batch.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace approxdft {
namespace {

void check_lengths(TransformMethod method, std::size_t got, std::size_t at) {
  if (method != TransformMethod::kExactDft && got != kSize) {
    throw DimensionError("transform_batch: input " + std::to_string(at) +
                         " has length " + std::to_string(got) +
                         ", expected 32");
  }
}

template <typename Vec, typename Fn>
std::vector<Vec> run(std::span<const Vec> inputs, Execution exec, Fn&& fn) {
  // Outputs are overwritten in place; copying the inputs just sizes them.
  std::vector<Vec> out(inputs.begin(), inputs.end());
  const auto count = static_cast<std::int64_t>(inputs.size());
  if (exec == Execution::kSerial) {
    for (std::int64_t i = 0; i < count; ++i) out[i] = fn(inputs[i]);
    return out;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) out[i] = fn(inputs[i]);
  return out;
}

}  // namespace

std::vector<ComplexVector> transform_batch(
    TransformMethod method, std::span<const ComplexVector> inputs,
    Execution exec) {
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    check_lengths(method, inputs[i].size(), i);
  }
  return run(inputs, exec,
             [method](const ComplexVector& x) { return transform(method, x); });
}

std::vector<GaussianVector> transform_batch(
    TransformMethod method, std::span<const GaussianVector> inputs,
    Execution exec) {
  if (method == TransformMethod::kExactDft) {
    throw ParameterError("integer batch path supports dense and fast only");
  }
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    check_lengths(method, inputs[i].size(), i);
  }
  const DenseQuantizedMatrix& m = approx_matrix();
  if (method == TransformMethod::kApproxDense) {
    return run(inputs, exec,
               [&m](const GaussianVector& x) { return apply_dense(m, x); });
  }
  return run(inputs, exec,
             [](const GaussianVector& x) { return apply_fast(x); });
}

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

}  // namespace approxdft
