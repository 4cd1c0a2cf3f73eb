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

#ifndef APPROXDFT_FIXTURES_HPP_
#define APPROXDFT_FIXTURES_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "approxdft/numeric.hpp"

namespace approxdft {

inline constexpr std::size_t kSize = 32;
inline constexpr std::size_t kStageCount = 8;

struct SparseTerm {
  std::size_t col = 0;
  QuantizedEntry value;

  friend bool operator==(const SparseTerm&, const SparseTerm&) = default;
};

using SparseRow = std::vector<SparseTerm>;

// One sparse factor of the fast algorithm. Rows hold only nonzero terms,
// sorted by strictly increasing column.
class StageMatrix {
 public:
  // Throws DimensionError on unsorted/out-of-range columns and
  // ParameterError on explicit zero terms or a non-positive index.
  StageMatrix(int index, std::vector<SparseRow> rows);

  static StageMatrix identity(int index, std::size_t n = kSize);

  int index() const { return index_; }
  std::size_t size() const { return rows_.size(); }
  std::span<const SparseTerm> row(std::size_t r) const { return rows_[r]; }

  // Copy with (row, col) set to `value`; a zero value removes the term.
  StageMatrix with_entry(std::size_t row, std::size_t col,
                         QuantizedEntry value) const;

  DenseQuantizedMatrix to_dense() const;

  friend bool operator==(const StageMatrix&, const StageMatrix&) = default;

 private:
  int index_;
  std::vector<SparseRow> rows_;
};

// The 32-point approximate DFT matrix (g = 1+j):
// row 0 and column 0 are all ones, row 16 alternates +-1.
const DenseQuantizedMatrix& approx_matrix();

// W1..W8 in application order: W1 acts on the input first and
// approx_matrix() == W8 * W7 * ... * W1.
const std::vector<StageMatrix>& stage_matrices();

}  // namespace approxdft

#endif  // APPROXDFT_FIXTURES_HPP_
