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

#include "approxdft/fixtures.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <string_view>
#include <utility>

namespace approxdft {
namespace {

// Approximate matrix rows. g = 1+j, g* = 1-j.
constexpr std::array<std::string_view, kSize> kApproxRows = {
    "1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1 1",
    "1 1 1 g* g* g* -j -j -j -j -j -g -g -g -1 -1 -1 -1 -1 -g* -g* -g* j j j j j g g g 1 1",
    "1 1 g* -j -j -j -g -1 -1 -1 -g* j j j g 1 1 1 g* -j -j -j -g -1 -1 -1 -g* j j j g 1",
    "1 g* -j -j -g -1 -1 -g* j g 1 1 g* -j -j -g -1 -g* j j g 1 1 g* -j -g -1 -1 -g* j j g",
    "1 g* -j -g -1 -g* j g 1 g* -j -g -1 -g* j g 1 g* -j -g -1 -g* j g 1 g* -j -g -1 -g* j g",
    "1 g* -j -1 -g* j 1 g* -j -g -1 j g 1 -j -g -1 -g* j 1 g* -j -1 -g* j g 1 -j -g -1 j g",
    "1 -j -g -1 j 1 g* -j -1 j g 1 -j -1 -g* j 1 -j -g -1 j 1 g* -j -1 j g 1 -j -1 -g* j",
    "1 -j -1 -g* g g* -j -1 j 1 -j -g -g* g 1 -j -1 j 1 g* -g -g* j 1 -j -1 j g g* -g -1 j",
    "1 -j -1 j 1 -j -1 j 1 -j -1 j 1 -j -1 j 1 -j -1 j 1 -j -1 j 1 -j -1 j 1 -j -1 j",
    "1 -j -1 g g* -g j 1 -j -1 j g* -g -g* 1 -j -1 j 1 -g -g* g -j -1 j 1 -j -g* g g* -1 j",
    "1 -j -g* 1 -j -1 g -j -1 j g* -1 j 1 -g j 1 -j -g* 1 -j -1 g -j -1 j g* -1 j 1 -g j",
    "1 -g j 1 -g j 1 -g j g* -1 j g* -1 j g* -1 g -j -1 g -j -1 g -j -g* 1 -j -g* 1 -j -g*",
    "1 -g j g* -1 g -j -g* 1 -g j g* -1 g -j -g* 1 -g j g* -1 g -j -g* 1 -g j g* -1 g -j -g*",
    "1 -g j -j -g* 1 -1 g -j -g* 1 -1 g -j j g* -1 g -j j g* -1 1 -g j g* -1 1 -g j -j -g*",
    "1 -1 g -j j -j -g* 1 -1 1 -g j -j j g* -1 1 -1 g -j j -j -g* 1 -1 1 -g j -j j g* -1",
    "1 -1 1 -g g -g j -j j -j j g* -g* g* -1 1 -1 1 -1 g -g g -j j -j j -j -g* g* -g* 1 -1",
    "1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1 1 -1",
    "1 -1 1 -g* g* -g* -j j -j j -j g -g g -1 1 -1 1 -1 g* -g* g* j -j j -j j -g g -g 1 -1",
    "1 -1 g* j -j j -g 1 -1 1 -g* -j j -j g -1 1 -1 g* j -j j -g 1 -1 1 -g* -j j -j g -1",
    "1 -g* -j j -g 1 -1 g* j -g 1 -1 g* j -j g -1 g* j -j g -1 1 -g* -j g -1 1 -g* -j j -g",
    "1 -g* -j g -1 g* j -g 1 -g* -j g -1 g* j -g 1 -g* -j g -1 g* j -g 1 -g* -j g -1 g* j -g",
    "1 -g* -j 1 -g* -j 1 -g* -j g -1 -j g -1 -j g -1 g* j -1 g* j -1 g* j -g 1 j -g 1 j -g",
    "1 j -g 1 j -1 g* j -1 -j g -1 -j 1 -g* -j 1 j -g 1 j -1 g* j -1 -j g -1 -j 1 -g* -j",
    "1 j -1 g* g -g* -j 1 j -1 -j g -g* -g 1 j -1 -j 1 -g* -g g* j -1 -j 1 j -g g* g -1 -j",
    "1 j -1 -j 1 j -1 -j 1 j -1 -j 1 j -1 -j 1 j -1 -j 1 j -1 -j 1 j -1 -j 1 j -1 -j",
    "1 j -1 -g g* g j -1 -j 1 j -g* -g g* 1 j -1 -j 1 g -g* -g -j 1 j -1 -j g* g -g* -1 -j",
    "1 j -g* -1 -j 1 g j -1 -j g* 1 j -1 -g -j 1 j -g* -1 -j 1 g j -1 -j g* 1 j -1 -g -j",
    "1 g j -1 -g -j 1 g j -g* -1 -j g* 1 j -g* -1 -g -j 1 g j -1 -g -j g* 1 j -g* -1 -j g*",
    "1 g j -g* -1 -g -j g* 1 g j -g* -1 -g -j g* 1 g j -g* -1 -g -j g* 1 g j -g* -1 -g -j g*",
    "1 g j j -g* -1 -1 -g -j g* 1 1 g j j -g* -1 -g -j -j g* 1 1 g j -g* -1 -1 -g -j -j g*",
    "1 1 g j j j -g* -1 -1 -1 -g -j -j -j g* 1 1 1 g j j j -g* -1 -1 -1 -g -j -j -j g* 1",
    "1 1 1 g g g j j j j j -g* -g* -g* -1 -1 -1 -1 -1 -g -g -g -j -j -j -j -j g* g* g* 1 1",
};

const std::vector<SparseRow> kStage1 = {
    {{0, kOne}, {16, kOne}},
    {{1, kOne}, {15, kOne}},
    {{2, kOne}, {14, kOne}},
    {{3, kOne}, {13, kOne}},
    {{4, kOne}, {12, kOne}},
    {{5, kOne}, {11, kOne}},
    {{6, kOne}, {10, kOne}},
    {{7, kOne}, {9, kOne}},
    {{8, kOne}},
    {{7, kOne}, {9, kMinusOne}},
    {{6, kOne}, {10, kMinusOne}},
    {{5, kOne}, {11, kMinusOne}},
    {{4, kOne}, {12, kMinusOne}},
    {{3, kOne}, {13, kMinusOne}},
    {{2, kOne}, {14, kMinusOne}},
    {{1, kOne}, {15, kMinusOne}},
    {{0, kOne}, {16, kMinusOne}},
    {{17, kOne}, {31, kOne}},
    {{18, kOne}, {30, kOne}},
    {{19, kOne}, {29, kOne}},
    {{20, kOne}, {28, kOne}},
    {{21, kOne}, {27, kOne}},
    {{22, kOne}, {26, kOne}},
    {{23, kOne}, {25, kOne}},
    {{24, kOne}},
    {{23, kOne}, {25, kMinusOne}},
    {{22, kOne}, {26, kMinusOne}},
    {{21, kOne}, {27, kMinusOne}},
    {{20, kOne}, {28, kMinusOne}},
    {{19, kOne}, {29, kMinusOne}},
    {{18, kOne}, {30, kMinusOne}},
    {{17, kOne}, {31, kMinusOne}},
};

const std::vector<SparseRow> kStage2 = {
    {{0, kOne}},
    {{1, kOne}, {17, kOne}},
    {{2, kOne}, {18, kOne}},
    {{3, kOne}, {19, kOne}},
    {{4, kOne}, {20, kOne}},
    {{5, kOne}, {21, kOne}},
    {{6, kOne}, {22, kOne}},
    {{7, kOne}, {23, kOne}},
    {{8, kOne}, {24, kOne}},
    {{9, kOne}, {25, kOne}},
    {{10, kOne}, {26, kOne}},
    {{11, kOne}, {27, kOne}},
    {{12, kOne}, {28, kOne}},
    {{13, kOne}, {29, kOne}},
    {{14, kOne}, {30, kOne}},
    {{15, kOne}, {31, kOne}},
    {{16, kOne}},
    {{1, kOne}, {17, kMinusOne}},
    {{2, kOne}, {18, kMinusOne}},
    {{3, kOne}, {19, kMinusOne}},
    {{4, kOne}, {20, kMinusOne}},
    {{5, kOne}, {21, kMinusOne}},
    {{6, kOne}, {22, kMinusOne}},
    {{7, kOne}, {23, kMinusOne}},
    {{8, kOne}, {24, kMinusOne}},
    {{9, kOne}, {25, kMinusOne}},
    {{10, kOne}, {26, kMinusOne}},
    {{11, kOne}, {27, kMinusOne}},
    {{12, kOne}, {28, kMinusOne}},
    {{13, kOne}, {29, kMinusOne}},
    {{14, kOne}, {30, kMinusOne}},
    {{15, kOne}, {31, kMinusOne}},
};

const std::vector<SparseRow> kStage3 = {
    {{0, kOne}, {8, kOne}},
    {{1, kOne}, {7, kOne}},
    {{2, kOne}, {6, kOne}},
    {{3, kOne}, {5, kOne}},
    {{4, kOne}},
    {{3, kOne}, {5, kMinusOne}},
    {{2, kOne}, {6, kMinusOne}},
    {{1, kOne}, {7, kMinusOne}},
    {{0, kOne}, {8, kMinusOne}},
    {{9, kOne}, {15, kOne}},
    {{10, kOne}, {14, kOne}},
    {{11, kOne}, {13, kOne}},
    {{12, kOne}},
    {{11, kOne}, {13, kMinusOne}},
    {{10, kOne}, {14, kMinusOne}},
    {{9, kOne}, {15, kMinusOne}},
    {{16, kOne}},
    {{17, kOne}},
    {{18, kOne}},
    {{19, kOne}},
    {{20, kOne}},
    {{21, kOne}},
    {{22, kOne}},
    {{23, kOne}},
    {{24, kOne}},
    {{25, kOne}},
    {{26, kOne}},
    {{27, kOne}},
    {{28, kOne}},
    {{29, kOne}},
    {{30, kOne}},
    {{31, kOne}},
};

const std::vector<SparseRow> kStage4 = {
    {{0, kOne}, {4, kOne}},
    {{1, kOne}, {3, kOne}},
    {{2, kOne}},
    {{1, kOne}, {3, kMinusOne}},
    {{0, kOne}, {4, kMinusOne}},
    {{5, kOne}},
    {{6, kOne}, {8, kOne}},
    {{7, kOne}},
    {{6, kOne}, {8, kMinusOne}},
    {{9, kOne}},
    {{10, kOne}, {12, kOne}},
    {{11, kOne}},
    {{10, kOne}, {12, kMinusOne}},
    {{13, kOne}, {15, kOne}},
    {{14, kOne}},
    {{13, kOne}, {15, kMinusOne}},
    {{16, kOne}, {28, kOne}},
    {{17, kOne}},
    {{18, kOne}},
    {{19, kOne}},
    {{20, kOne}, {24, kOne}},
    {{21, kOne}},
    {{22, kOne}},
    {{23, kOne}},
    {{20, kOne}, {24, kMinusOne}},
    {{25, kOne}},
    {{26, kOne}},
    {{27, kOne}},
    {{16, kOne}, {28, kMinusOne}},
    {{29, kOne}},
    {{30, kOne}},
    {{31, kOne}},
};

const std::vector<SparseRow> kStage5 = {
    {{0, kOne}, {2, kOne}},
    {{1, kOne}},
    {{0, kOne}, {2, kMinusOne}},
    {{3, kOne}, {4, kOne}},
    {{3, kOne}, {4, kMinusOne}},
    {{5, kOne}, {8, kOne}},
    {{6, kOne}, {7, kOne}},
    {{6, kOne}, {7, kMinusOne}},
    {{5, kOne}, {8, kMinusOne}},
    {{9, kOne}, {12, kOne}},
    {{10, kOne}, {11, kOne}},
    {{10, kOne}, {11, kMinusOne}},
    {{9, kOne}, {12, kMinusOne}},
    {{13, kOne}, {14, kOne}},
    {{13, kOne}, {14, kMinusOne}},
    {{15, kOne}},
    {{16, kMinusOne}, {30, kOne}},
    {{17, kOne}},
    {{18, kOne}, {24, kOne}},
    {{19, kOne}, {21, kOne}, {23, kOne}},
    {{20, kOne}, {22, kOne}},
    {{19, kOne}, {21, kMinusOne}},
    {{20, kOne}, {22, kMinusOne}},
    {{19, kOne}, {23, kMinusOne}},
    {{18, kOne}, {24, kMinusOne}},
    {{25, kOne}},
    {{26, kOne}, {28, kOne}},
    {{27, kOne}, {29, kOne}, {31, kOne}},
    {{26, kOne}, {28, kMinusOne}},
    {{27, kOne}, {29, kMinusOne}},
    {{16, kOne}, {30, kOne}},
    {{27, kOne}, {31, kMinusOne}},
};

const std::vector<SparseRow> kStage6 = {
    {{0, kOne}, {1, kOne}},
    {{0, kOne}, {1, kMinusOne}},
    {{2, kOne}},
    {{3, kOne}},
    {{4, kOne}},
    {{5, kOne}},
    {{6, kOne}},
    {{7, kOne}},
    {{8, kOne}},
    {{9, kOne}},
    {{10, kOne}},
    {{11, kOne}},
    {{12, kOne}},
    {{13, kOne}},
    {{14, kOne}},
    {{15, kOne}},
    {{16, kOne}},
    {{17, kOne}, {21, kOne}, {23, kMinusOne}},
    {{18, kOne}},
    {{19, kOne}, {20, kOne}},
    {{19, kOne}, {20, kMinusOne}},
    {{17, kOne}, {21, kMinusOne}},
    {{22, kOne}},
    {{17, kOne}, {23, kOne}},
    {{24, kOne}},
    {{25, kOne}, {29, kOne}, {31, kMinusOne}},
    {{26, kOne}},
    {{27, kOne}, {30, kOne}},
    {{28, kOne}},
    {{25, kOne}, {29, kMinusOne}},
    {{27, kOne}, {30, kMinusOne}},
    {{25, kOne}, {31, kOne}},
};

const std::vector<SparseRow> kStage7 = {
    {{0, kOne}},
    {{1, kOne}},
    {{2, kOne}},
    {{3, kOne}},
    {{4, kOne}},
    {{5, kOne}},
    {{6, kOne}},
    {{7, kOne}},
    {{8, kOne}},
    {{9, kOne}},
    {{10, kOne}},
    {{11, kOne}},
    {{12, kOne}},
    {{13, kOne}},
    {{14, kOne}},
    {{15, kOne}},
    {{16, kOne}, {29, kOne}},
    {{17, kOne}, {24, kOne}},
    {{18, kMinusOne}, {23, kOne}},
    {{19, kOne}},
    {{20, kOne}},
    {{21, kOne}, {22, kOne}},
    {{21, kOne}, {22, kMinusOne}},
    {{18, kOne}, {23, kOne}},
    {{17, kOne}, {24, kMinusOne}},
    {{25, kOne}, {26, kOne}},
    {{25, kOne}, {26, kMinusOne}},
    {{27, kOne}},
    {{28, kOne}, {31, kOne}},
    {{16, kOne}, {29, kMinusOne}},
    {{30, kOne}},
    {{28, kOne}, {31, kMinusOne}},
};

const std::vector<SparseRow> kStage8 = {
    {{0, kOne}},
    {{19, kMinusJ}, {27, kOne}},
    {{6, kOne}, {10, kMinusJ}},
    {{23, kMinusJ}, {28, kMinusOne}},
    {{3, kOne}, {13, kJ}},
    {{17, kMinusJ}, {25, kOne}},
    {{5, kMinusOne}, {9, kMinusJ}},
    {{16, kMinusOne}, {22, kMinusJ}},
    {{2, kOne}, {15, kMinusJ}},
    {{21, kMinusJ}, {29, kMinusOne}},
    {{8, kOne}, {12, kMinusJ}},
    {{24, kMinusJ}, {26, kMinusOne}},
    {{4, kMinusOne}, {14, kJ}},
    {{18, kMinusJ}, {31, kMinusOne}},
    {{7, kOne}, {11, kJ}},
    {{20, kMinusJ}, {30, kMinusOne}},
    {{1, kOne}},
    {{20, kJ}, {30, kMinusOne}},
    {{7, kOne}, {11, kMinusJ}},
    {{18, kJ}, {31, kMinusOne}},
    {{4, kMinusOne}, {14, kMinusJ}},
    {{24, kJ}, {26, kMinusOne}},
    {{8, kOne}, {12, kJ}},
    {{21, kJ}, {29, kMinusOne}},
    {{2, kOne}, {15, kJ}},
    {{16, kMinusOne}, {22, kJ}},
    {{5, kMinusOne}, {9, kJ}},
    {{17, kJ}, {25, kOne}},
    {{3, kOne}, {13, kMinusJ}},
    {{23, kJ}, {28, kMinusOne}},
    {{6, kOne}, {10, kJ}},
    {{19, kJ}, {27, kOne}},
};

QuantizedEntry parse_token(std::string_view t) {
  if (t == "0") return kZero;
  if (t == "1") return kOne;
  if (t == "-1") return kMinusOne;
  if (t == "j") return kJ;
  if (t == "-j") return kMinusJ;
  if (t == "g") return kGamma;
  if (t == "-g") return -kGamma;
  if (t == "g*") return kGammaConj;
  if (t == "-g*") return -kGammaConj;
  throw DataError("bad fixture token '" + std::string(t) + "'");
}

DenseQuantizedMatrix build_approx_matrix() {
  std::vector<QuantizedEntry> entries;
  entries.reserve(kSize * kSize);
  for (std::string_view row : kApproxRows) {
    std::size_t pos = 0;
    while (pos < row.size()) {
      std::size_t end = row.find(' ', pos);
      if (end == std::string_view::npos) end = row.size();
      entries.push_back(parse_token(row.substr(pos, end - pos)));
      pos = end + 1;
    }
  }
  return DenseQuantizedMatrix(kSize, std::move(entries));
}

std::vector<StageMatrix> build_stages() {
  std::vector<StageMatrix> stages;
  stages.reserve(kStageCount);
  int index = 1;
  for (const auto* rows : {&kStage1, &kStage2, &kStage3, &kStage4, &kStage5,
                           &kStage6, &kStage7, &kStage8}) {
    stages.emplace_back(index++, *rows);
  }
  return stages;
}

}  // namespace

StageMatrix::StageMatrix(int index, std::vector<SparseRow> rows)
    : index_(index), rows_(std::move(rows)) {
  if (index_ < 1) throw ParameterError("stage index must be positive");
  if (rows_.empty()) throw DimensionError("stage has no rows");
  const std::size_t n = rows_.size();
  for (const auto& row : rows_) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i].col >= n) throw DimensionError("stage column out of range");
      if (i > 0 && row[i].col <= row[i - 1].col) {
        throw DimensionError("stage columns not strictly increasing");
      }
      if (row[i].value.is_zero()) {
        throw ParameterError("stage row stores an explicit zero");
      }
    }
  }
}

StageMatrix StageMatrix::identity(int index, std::size_t n) {
  std::vector<SparseRow> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = {{i, kOne}};
  return StageMatrix(index, std::move(rows));
}

StageMatrix StageMatrix::with_entry(std::size_t row, std::size_t col,
                                    QuantizedEntry value) const {
  if (row >= size() || col >= size()) {
    throw IndexError("with_entry: position out of range");
  }
  auto rows = rows_;
  auto& r = rows[row];
  auto it = std::lower_bound(
      r.begin(), r.end(), col,
      [](const SparseTerm& t, std::size_t c) { return t.col < c; });
  const bool present = it != r.end() && it->col == col;
  if (value.is_zero()) {
    if (present) r.erase(it);
  } else if (present) {
    it->value = value;
  } else {
    r.insert(it, SparseTerm{col, value});
  }
  return StageMatrix(index_, std::move(rows));
}

DenseQuantizedMatrix StageMatrix::to_dense() const {
  DenseQuantizedMatrix m(size());
  for (std::size_t r = 0; r < size(); ++r) {
    for (const auto& t : rows_[r]) m.set(r, t.col, t.value);
  }
  return m;
}

const DenseQuantizedMatrix& approx_matrix() {
  static const DenseQuantizedMatrix kMatrix = build_approx_matrix();
  return kMatrix;
}

const std::vector<StageMatrix>& stage_matrices() {
  static const std::vector<StageMatrix> kStages = build_stages();
  return kStages;
}

}  // namespace approxdft
