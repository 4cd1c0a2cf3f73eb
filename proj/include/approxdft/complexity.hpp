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

// Real-operation accounting for multiplierless transforms.
//
// Every output sample keeps a real and an imaginary accumulator. A term
// feeds a lane when the entry/lane combination produces a nonzero value
// there (e.g. j times a purely real sample feeds only the imaginary lane).
// Each accumulator costs one real addition per contribution beyond its
// first. Negation, lane swaps (multiplying by +-j) and lane duplication
// (+-1+-j on single-lane data) are free, and no alphabet entry needs a
// real multiplication.
//
// Lane liveness is propagated stage by stage, so a factorized transform
// is charged only for lanes that can actually carry data.

#ifndef APPROXDFT_COMPLEXITY_HPP_
#define APPROXDFT_COMPLEXITY_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "approxdft/fixtures.hpp"
#include "approxdft/numeric.hpp"

namespace approxdft {

enum class DataKind { kPurelyReal, kComplex };

// Which lanes of a sample may be nonzero.
struct LaneFlags {
  bool re = false;
  bool im = false;

  friend bool operator==(LaneFlags, LaneFlags) = default;
};

LaneFlags lanes_for(DataKind kind);
// kPurelyReal when every imaginary part is exactly zero.
DataKind classify(const ComplexVector& x);

struct RowTerm {
  QuantizedEntry entry;
  LaneFlags input;
};

struct RowCost {
  std::uint64_t additions = 0;
  LaneFlags output;
};

RowCost count_row(std::span<const RowTerm> terms);

struct OperationTally {
  std::uint64_t real_additions = 0;
  std::uint64_t real_multiplications = 0;
  std::optional<std::vector<std::uint64_t>> per_stage;  // additions per W_i

  friend bool operator==(const OperationTally&,
                         const OperationTally&) = default;
};

OperationTally count_dense(const DenseQuantizedMatrix& m, DataKind kind);
// Stages are counted in application order; per_stage has one slot each.
OperationTally count_fast(std::span<const StageMatrix> stages, DataKind kind);

}  // namespace approxdft

#endif  // APPROXDFT_COMPLEXITY_HPP_
