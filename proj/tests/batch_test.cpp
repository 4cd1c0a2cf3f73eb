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

#include <random>

#include "approxdft/fixtures.hpp"
#include "gtest/gtest.h"
#include "test_support.hpp"

namespace approxdft {
namespace {

std::vector<ComplexVector> random_batch(std::size_t count, std::size_t n) {
  std::mt19937_64 rng(count * 31 + n);
  std::vector<ComplexVector> v;
  for (std::size_t i = 0; i < count; ++i) {
    v.push_back(testing::random_vector(rng, n));
  }
  return v;
}

TEST(BatchTest, ParallelMatchesSerialBitForBit) {
  const auto inputs = random_batch(257, 32);
  for (auto method : {TransformMethod::kExactDft, TransformMethod::kApproxDense,
                      TransformMethod::kApproxFast}) {
    EXPECT_EQ(transform_batch(method, inputs, Execution::kParallel),
              transform_batch(method, inputs, Execution::kSerial));
  }
}

TEST(BatchTest, SerialMatchesSingleCalls) {
  const auto inputs = random_batch(9, 32);
  const auto out =
      transform_batch(TransformMethod::kApproxFast, inputs, Execution::kSerial);
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    EXPECT_EQ(out[i], apply_fast(inputs[i]));
  }
}

TEST(BatchTest, IntegerFastEqualsIntegerDense) {
  std::mt19937_64 rng(5);
  std::vector<GaussianVector> inputs;
  for (int i = 0; i < 300; ++i) {
    inputs.push_back(testing::random_gaussian(rng, 32, -128, 128));
  }
  const auto fast = transform_batch(TransformMethod::kApproxFast, inputs);
  EXPECT_EQ(fast, transform_batch(TransformMethod::kApproxDense, inputs));
  EXPECT_EQ(fast, transform_batch(TransformMethod::kApproxFast, inputs,
                                  Execution::kSerial));
}

TEST(BatchTest, ExactAcceptsAnyLength) {
  const auto inputs = random_batch(4, 12);
  EXPECT_EQ(transform_batch(TransformMethod::kExactDft, inputs).size(), 4u);
  EXPECT_THROW(transform_batch(TransformMethod::kApproxFast, inputs),
               DimensionError);
}

TEST(BatchTest, IntegerExactIsRejected) {
  std::vector<GaussianVector> inputs(1, GaussianVector(32));
  EXPECT_THROW(transform_batch(TransformMethod::kExactDft, inputs),
               ParameterError);
}

TEST(BatchTest, EmptyBatch) {
  EXPECT_TRUE(transform_batch(TransformMethod::kApproxFast,
                              std::span<const ComplexVector>{})
                  .empty());
  EXPECT_GE(max_threads(), 1);
}

}  // namespace
}  // namespace approxdft
