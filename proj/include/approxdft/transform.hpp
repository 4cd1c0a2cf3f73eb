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

#ifndef APPROXDFT_TRANSFORM_HPP_
#define APPROXDFT_TRANSFORM_HPP_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "approxdft/fixtures.hpp"
#include "approxdft/numeric.hpp"

namespace approxdft {

enum class TransformMethod { kExactDft, kApproxDense, kApproxFast };

std::string_view to_string(TransformMethod m);
// Accepts "exact", "dense" and "fast".
std::optional<TransformMethod> parse_method(std::string_view name);

// N x N matrix with entry exp(-j 2 pi r c / N) at (r, c). Quarter-turn
// entries (1, -j, -1, j) are exact. Throws ParameterError for n == 0.
DenseComplexMatrix exact_dft_matrix(std::size_t n);

// y_k = sum_n m(k, n) x_n, accumulated in ascending column order.
// Throws DimensionError when x.size() != m.n().
ComplexVector apply_dense(const DenseQuantizedMatrix& m, const ComplexVector& x);
GaussianVector apply_dense(const DenseQuantizedMatrix& m,
                           const GaussianVector& x);

// Applies stages[0] first, then stages[1], and so on.
ComplexVector apply_stages(std::span<const StageMatrix> stages,
                           const ComplexVector& x);
GaussianVector apply_stages(std::span<const StageMatrix> stages,
                            const GaussianVector& x);

// Fast 32-point approximate transform, W8 * (... * (W1 * x)).
ComplexVector apply_fast(const ComplexVector& x);
GaussianVector apply_fast(const GaussianVector& x);

// Exact DFT of any length by direct O(N^2) summation.
ComplexVector apply_exact(const ComplexVector& x);

ComplexVector transform(TransformMethod method, const ComplexVector& x);

struct Mismatch {
  std::size_t row = 0;
  std::size_t col = 0;
  GaussianInt expected;
  GaussianInt got;
};

struct FactorizationCheck {
  bool ok = false;
  std::optional<Mismatch> first_mismatch;  // row-major first
};

// Exact Gaussian-integer product of the stages (last stage leftmost),
// row-major.
std::vector<GaussianInt> stage_product(std::span<const StageMatrix> stages);

FactorizationCheck verify_factorization(std::span<const StageMatrix> stages,
                                        const DenseQuantizedMatrix& target);
FactorizationCheck verify_factorization();

std::string describe(const Mismatch& m);

}  // namespace approxdft

#endif  // APPROXDFT_TRANSFORM_HPP_
