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

// Batched transforms. kParallel distributes independent vectors over
// OpenMP threads; kSerial is the plain loop kept as the reference the
// parallel path is tested and benchmarked against. Both produce identical
// results since each vector is transformed by the same single-threaded
// kernel.

#ifndef APPROXDFT_BATCH_HPP_
#define APPROXDFT_BATCH_HPP_

#include <span>
#include <vector>

#include "approxdft/numeric.hpp"
#include "approxdft/transform.hpp"

namespace approxdft {

enum class Execution { kSerial, kParallel };

// Throws DimensionError up front if any input has the wrong length.
std::vector<ComplexVector> transform_batch(
    TransformMethod method, std::span<const ComplexVector> inputs,
    Execution exec = Execution::kParallel);

// Exact integer path; method must be kApproxDense or kApproxFast.
std::vector<GaussianVector> transform_batch(
    TransformMethod method, std::span<const GaussianVector> inputs,
    Execution exec = Execution::kParallel);

// Number of OpenMP threads the parallel path will use (1 without OpenMP).
int max_threads();

}  // namespace approxdft

#endif  // APPROXDFT_BATCH_HPP_
