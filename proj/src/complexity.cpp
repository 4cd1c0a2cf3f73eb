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

#include "approxdft/complexity.hpp"

#include <numeric>
#include <utility>

namespace approxdft {
namespace {

std::uint64_t extra_terms(std::uint64_t contributions) {
  return contributions > 0 ? contributions - 1 : 0;
}

}  // namespace

LaneFlags lanes_for(DataKind kind) {
  return kind == DataKind::kPurelyReal ? LaneFlags{true, false}
                                       : LaneFlags{true, true};
}

DataKind classify(const ComplexVector& x) {
  for (const auto& s : x) {
    if (s.imag() != 0.0) return DataKind::kComplex;
  }
  return DataKind::kPurelyReal;
}

RowCost count_row(std::span<const RowTerm> terms) {
  std::uint64_t to_re = 0;
  std::uint64_t to_im = 0;
  for (const auto& t : terms) {
    const bool er = t.entry.re() != 0;
    const bool ei = t.entry.im() != 0;
    // out.re = e.re x.re - e.im x.im; out.im = e.re x.im + e.im x.re
    to_re += (er && t.input.re) + (ei && t.input.im);
    to_im += (er && t.input.im) + (ei && t.input.re);
  }
  return {extra_terms(to_re) + extra_terms(to_im), {to_re > 0, to_im > 0}};
}

OperationTally count_dense(const DenseQuantizedMatrix& m, DataKind kind) {
  const LaneFlags lanes = lanes_for(kind);
  OperationTally tally;
  std::vector<RowTerm> terms;
  for (std::size_t r = 0; r < m.n(); ++r) {
    terms.clear();
    for (const auto& e : m.row(r)) {
      if (!e.is_zero()) terms.push_back({e, lanes});
    }
    tally.real_additions += count_row(terms).additions;
  }
  return tally;
}

OperationTally count_fast(std::span<const StageMatrix> stages, DataKind kind) {
  OperationTally tally;
  tally.per_stage.emplace();
  if (stages.empty()) return tally;

  std::vector<LaneFlags> lanes(stages.front().size(), lanes_for(kind));
  std::vector<LaneFlags> next;
  std::vector<RowTerm> terms;
  for (const auto& stage : stages) {
    if (stage.size() != lanes.size()) {
      throw DimensionError("count_fast: stage sizes differ");
    }
    next.assign(stage.size(), LaneFlags{});
    std::uint64_t additions = 0;
    for (std::size_t r = 0; r < stage.size(); ++r) {
      terms.clear();
      for (const auto& t : stage.row(r)) terms.push_back({t.value, lanes[t.col]});
      const RowCost cost = count_row(terms);
      additions += cost.additions;
      next[r] = cost.output;
    }
    tally.per_stage->push_back(additions);
    std::swap(lanes, next);
  }
  tally.real_additions = std::accumulate(tally.per_stage->begin(),
                                         tally.per_stage->end(),
                                         std::uint64_t{0});
  return tally;
}

}  // namespace approxdft
