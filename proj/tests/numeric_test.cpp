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

#include "approxdft/numeric.hpp"

#include <cmath>
#include <limits>
#include <random>

#include "gtest/gtest.h"
#include "test_support.hpp"

namespace approxdft {
namespace {

using testing::general_mul;

TEST(QuantizedEntryTest, RejectsOutOfAlphabetLanes) {
  EXPECT_THROW(QuantizedEntry(2, 0), ParameterError);
  EXPECT_THROW(QuantizedEntry(0, -2), ParameterError);
  EXPECT_NO_THROW(QuantizedEntry(-1, 1));
}

TEST(QuantizedEntryTest, ConjugationIsAnInvolution) {
  for (const auto e : kAlphabet) {
    EXPECT_EQ(e.conj().re(), e.re());
    EXPECT_EQ(e.conj().im(), -e.im());
    EXPECT_EQ(e.conj().conj(), e);
  }
  EXPECT_EQ(kGamma.conj(), kGammaConj);
}

TEST(EntryMulTest, Examples) {
  EXPECT_EQ(entry_mul(kZero, Complex(3.5, -2.0)), Complex(0.0, 0.0));
  EXPECT_EQ(entry_mul(kGamma, Complex(1.0, 0.0)), Complex(1.0, 1.0));
  EXPECT_EQ(entry_mul(kMinusJ, Complex(0.0, 1.0)), Complex(1.0, 0.0));
}

TEST(EntryMulTest, MatchesGeneralMultiplicationExactly) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1e6, 1e6);
  for (int trial = 0; trial < 2000; ++trial) {
    const Complex v(u(rng), u(rng));
    for (const auto e : kAlphabet) {
      EXPECT_EQ(entry_mul(e, v), general_mul(e, v));
    }
  }
}

TEST(EntryMulTest, CommutesWithConjugation) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-10.0, 10.0);
  for (int trial = 0; trial < 500; ++trial) {
    const Complex v(u(rng), u(rng));
    for (const auto e : kAlphabet) {
      EXPECT_EQ(entry_mul(e.conj(), std::conj(v)), std::conj(entry_mul(e, v)));
    }
  }
}

TEST(EntryMulTest, GaussianPathMatchesProduct) {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<std::int64_t> u(-1000, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const GaussianInt v{u(rng), u(rng)};
    for (const auto e : kAlphabet) {
      EXPECT_EQ(entry_mul(e, v), (GaussianInt{e.re(), e.im()} * v));
    }
  }
}

TEST(ComplexVectorTest, RejectsEmptyAndNonFinite) {
  EXPECT_THROW(ComplexVector(std::vector<Complex>{}), DimensionError);
  EXPECT_THROW(ComplexVector(std::vector<Complex>{{1.0, std::nan("")}}), DataError);
  EXPECT_THROW(
      ComplexVector(std::vector<Complex>{{std::numeric_limits<double>::infinity(), 0.0}}),
      DataError);
}

TEST(ComplexVectorTest, GaussianViewOnlyForIntegers) {
  ComplexVector ints(std::vector<Complex>{{1.0, -2.0}, {0.0, 3.0}});
  const auto g = ints.to_gaussian();
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ((*g)[0], (GaussianInt{1, -2}));
  EXPECT_EQ(ComplexVector::from_gaussian(*g), ints);
  EXPECT_FALSE(ComplexVector(std::vector<Complex>{{0.5, 0.0}}).to_gaussian().has_value());
}

TEST(FrobeniusTest, Examples) {
  DenseComplexMatrix zeros(32, 32);
  DenseComplexMatrix ones(32, 32);
  for (std::size_t r = 0; r < 32; ++r) {
    for (std::size_t c = 0; c < 32; ++c) ones.at(r, c) = 1.0;
  }
  EXPECT_EQ(frobenius_distance(ones, ones), 0.0);
  EXPECT_DOUBLE_EQ(frobenius_distance(zeros, ones), 32.0);
  EXPECT_THROW(frobenius_distance(zeros, DenseComplexMatrix(32, 31)),
               DimensionError);
}

DenseComplexMatrix random_matrix(std::mt19937_64& rng, std::size_t r,
                                 std::size_t c) {
  std::uniform_real_distribution<double> u(-5.0, 5.0);
  DenseComplexMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = {u(rng), u(rng)};
  }
  return m;
}

TEST(FrobeniusTest, MetricProperties) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_matrix(rng, 6, 9);
    const auto b = random_matrix(rng, 6, 9);
    const auto c = random_matrix(rng, 6, 9);
    const double ab = frobenius_distance(a, b);
    const double bc = frobenius_distance(b, c);
    const double ac = frobenius_distance(a, c);
    EXPECT_EQ(ab, frobenius_distance(b, a));
    EXPECT_LE(ac, (ab + bc) * (1.0 + 1e-9));
    EXPECT_GT(ab, 0.0);
  }
}

TEST(RowEnergyTest, Examples) {
  DenseComplexMatrix m(2, 32);
  for (std::size_t c = 0; c < 32; ++c) m.at(0, c) = 1.0;
  EXPECT_DOUBLE_EQ(row_energy(m, 0), std::sqrt(32.0));
  EXPECT_EQ(row_energy(m, 1), 0.0);
  EXPECT_THROW(row_energy(m, 2), IndexError);
}

TEST(RowEnergyTest, EqualsDistanceFromZeroRow) {
  std::mt19937_64 rng(23);
  const auto m = random_matrix(rng, 5, 7);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    DenseComplexMatrix row(1, m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row.at(0, c) = m.at(k, c);
    const double e = row_energy(m, k);
    EXPECT_NEAR(e * e,
                std::pow(frobenius_distance(row, DenseComplexMatrix(1, 7)), 2),
                1e-9 * e * e);
  }
}

TEST(RowEnergyTest, QuantizedCountsUnitAndGammaEntries) {
  DenseQuantizedMatrix m(4);
  m.set(1, 0, kOne);
  m.set(1, 1, kMinusJ);
  m.set(1, 2, kGamma);
  m.set(1, 3, -kGammaConj);
  EXPECT_EQ(row_energy_squared(m, 0), 0);
  EXPECT_EQ(row_energy_squared(m, 1), 1 + 1 + 2 + 2);
  EXPECT_DOUBLE_EQ(row_energy(DenseComplexMatrix(m), 1), std::sqrt(6.0));
}

TEST(DenseQuantizedMatrixTest, ShapeChecks) {
  EXPECT_THROW(DenseQuantizedMatrix(0), DimensionError);
  EXPECT_THROW(DenseQuantizedMatrix(2, std::vector<QuantizedEntry>(3)),
               DimensionError);
  const auto id = DenseQuantizedMatrix::identity(3);
  EXPECT_EQ(id.at(1, 1), kOne);
  EXPECT_EQ(id.at(1, 2), kZero);
}

}  // namespace
}  // namespace approxdft
