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
#include <random>

#include "approxdft/fixtures.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace approxdft {
namespace {

constexpr LaneFlags kReal{true, false};

std::vector<RowTerm> real_terms(const std::vector<QuantizedEntry>& entries) {
  std::vector<RowTerm> terms;
  for (const auto& e : entries) terms.push_back({e, kReal});
  return terms;
}

TEST(CountRowTest, Examples) {
  EXPECT_EQ(count_row(real_terms(std::vector<QuantizedEntry>(32, kOne))).additions,
            31u);

  std::vector<QuantizedEntry> alt;
  for (int i = 0; i < 32; ++i) alt.push_back(i % 2 ? kJ : kMinusJ);
  const RowCost imag = count_row(real_terms(alt));
  EXPECT_EQ(imag.additions, 31u);
  EXPECT_EQ(imag.output, (LaneFlags{false, true}));

  const RowCost split = count_row(real_terms({kOne, kMinusJ}));
  EXPECT_EQ(split.additions, 0u);
  EXPECT_EQ(split.output, (LaneFlags{true, true}));

  EXPECT_EQ(count_row({}).additions, 0u);
}

TEST(CountRowTest, GammaDuplicatesIntoBothLanes) {
  // Two gamma terms on real data: one addition per lane.
  EXPECT_EQ(count_row(real_terms({kGamma, kGammaConj})).additions, 2u);
  // Complex data: each of re/im of gamma * x combines two lanes.
  const RowTerm t{kGamma, {true, true}};
  EXPECT_EQ(count_row(std::vector<RowTerm>{t}).additions, 2u);
  // Dead lanes contribute nothing.
  const RowTerm dead{kOne, {false, false}};
  EXPECT_EQ(count_row(std::vector<RowTerm>{dead, dead}).additions, 0u);
}

TEST(CountDenseTest, Examples) {
  const OperationTally approx =
      count_dense(approx_matrix(), DataKind::kPurelyReal);
  EXPECT_EQ(approx.real_multiplications, 0u);
  EXPECT_EQ(approx.real_additions, 1282u);
  EXPECT_FALSE(approx.per_stage.has_value());

  EXPECT_EQ(count_dense(DenseQuantizedMatrix::identity(32),
                        DataKind::kPurelyReal)
                .real_additions,
            0u);

  DenseQuantizedMatrix ones(32, std::vector<QuantizedEntry>(32 * 32, kOne));
  EXPECT_EQ(count_dense(ones, DataKind::kPurelyReal).real_additions, 992u);
}

TEST(CountFastTest, Fixtures) {
  const OperationTally fast =
      count_fast(stage_matrices(), DataKind::kPurelyReal);
  EXPECT_EQ(fast.real_multiplications, 0u);
  EXPECT_EQ(fast.real_additions, 144u);
  ASSERT_TRUE(fast.per_stage.has_value());
  EXPECT_EQ(*fast.per_stage,
            (std::vector<std::uint64_t>{30, 30, 14, 14, 30, 14, 12, 0}));
}

TEST(CountFastTest, IdentityStagesCostNothing) {
  std::vector<StageMatrix> id;
  for (int i = 1; i <= 8; ++i) id.push_back(StageMatrix::identity(i));
  const auto t = count_fast(id, DataKind::kPurelyReal);
  EXPECT_EQ(t.real_additions, 0u);
  EXPECT_EQ(*t.per_stage, std::vector<std::uint64_t>(8, 0));
}

TEST(CountFastTest, FirstStageAlone) {
  const std::span<const StageMatrix> w1(stage_matrices().data(), 1);
  EXPECT_EQ(count_fast(w1, DataKind::kPurelyReal).real_additions, 30u);
}

TEST(CountFastTest, ComplexInputDoublesRealStages) {
  // No published totals for complex input; with both lanes live each
  // real-only stage costs twice its real-input count.
  const auto t = count_fast(stage_matrices(), DataKind::kComplex);
  const auto& s = *t.per_stage;
  const std::vector<std::uint64_t> real_counts = {30, 30, 14, 14, 30, 14, 12};
  for (std::size_t i = 0; i < real_counts.size(); ++i) {
    EXPECT_EQ(s[i], 2 * real_counts[i]) << "W" << i + 1;
  }
  EXPECT_EQ(t.real_multiplications, 0u);
}

TEST(CountFastTest, PerStageSumsToTotalForRandomStages) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<StageMatrix> stages;
    const int count = 1 + static_cast<int>(rng() % 6);
    for (int s = 1; s <= count; ++s) {
      StageMatrix w = StageMatrix::identity(s, 16);
      for (int k = 0; k < 20; ++k) {
        w = w.with_entry(rng() % 16, rng() % 16, testing::random_entry(rng));
      }
      stages.push_back(std::move(w));
    }
    for (auto kind : {DataKind::kPurelyReal, DataKind::kComplex}) {
      const auto t = count_fast(stages, kind);
      EXPECT_EQ(t.real_additions,
                std::accumulate(t.per_stage->begin(), t.per_stage->end(),
                                std::uint64_t{0}));
      EXPECT_EQ(t.real_multiplications, 0u);
    }
  }
}

TEST(CountFastTest, IndependentOfDataValues) {
  std::mt19937_64 rng(13);
  const auto a = testing::random_vector(rng, 32, true);
  const auto b = testing::random_vector(rng, 32, true);
  ASSERT_EQ(classify(a), DataKind::kPurelyReal);
  ASSERT_EQ(classify(b), DataKind::kPurelyReal);
  EXPECT_EQ(count_fast(stage_matrices(), classify(a)),
            count_fast(stage_matrices(), classify(b)));
  EXPECT_EQ(count_dense(approx_matrix(), classify(a)),
            count_dense(approx_matrix(), classify(b)));
  EXPECT_EQ(classify(testing::random_vector(rng, 32, false)),
            DataKind::kComplex);
}

TEST(CountFastTest, RejectsMixedSizes) {
  std::vector<StageMatrix> stages = {StageMatrix::identity(1, 4),
                                     StageMatrix::identity(2, 8)};
  EXPECT_THROW(count_fast(stages, DataKind::kPurelyReal), DimensionError);
}

}  // namespace
}  // namespace approxdft
