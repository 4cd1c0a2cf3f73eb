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

#include "approxdft/transform.hpp"

#include <numbers>
#include <sstream>
#include <utility>

namespace approxdft {
namespace {

void require_size(std::size_t got, std::size_t want, const char* what) {
  if (got != want) {
    std::ostringstream os;
    os << what << ": expected length " << want << ", got " << got;
    throw DimensionError(os.str());
  }
}

// exp(-j 2 pi m / n) with m already reduced mod n.
Complex twiddle(std::size_t m, std::size_t n) {
  if ((4 * m) % n == 0) {
    switch ((4 * m) / n) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, -1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, 1.0};
    }
  }
  const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) /
                       static_cast<double>(n);
  return std::polar(1.0, angle);
}

template <typename Sample>
std::vector<Sample> dense_kernel(const DenseQuantizedMatrix& m,
                                 std::span<const Sample> x) {
  std::vector<Sample> y(m.n());
  for (std::size_t k = 0; k < m.n(); ++k) {
    Sample acc{};
    const auto row = m.row(k);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (!row[c].is_zero()) acc += entry_mul(row[c], x[c]);
    }
    y[k] = acc;
  }
  return y;
}

template <typename Sample>
std::vector<Sample> stage_kernel(std::span<const StageMatrix> stages,
                                 std::vector<Sample> x) {
  std::vector<Sample> y(x.size());
  for (const auto& stage : stages) {
    require_size(x.size(), stage.size(), "apply_stages");
    for (std::size_t r = 0; r < stage.size(); ++r) {
      Sample acc{};
      for (const auto& t : stage.row(r)) acc += entry_mul(t.value, x[t.col]);
      y[r] = acc;
    }
    std::swap(x, y);
  }
  return x;
}

}  // namespace

std::string_view to_string(TransformMethod m) {
  switch (m) {
    case TransformMethod::kExactDft: return "exact";
    case TransformMethod::kApproxDense: return "dense";
    case TransformMethod::kApproxFast: return "fast";
  }
  return "unknown";
}

std::optional<TransformMethod> parse_method(std::string_view name) {
  if (name == "exact") return TransformMethod::kExactDft;
  if (name == "dense") return TransformMethod::kApproxDense;
  if (name == "fast") return TransformMethod::kApproxFast;
  return std::nullopt;
}

DenseComplexMatrix exact_dft_matrix(std::size_t n) {
  if (n == 0) throw ParameterError("exact_dft_matrix: size must be positive");
  DenseComplexMatrix f(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) f.at(r, c) = twiddle((r * c) % n, n);
  }
  return f;
}

ComplexVector apply_dense(const DenseQuantizedMatrix& m,
                          const ComplexVector& x) {
  require_size(x.size(), m.n(), "apply_dense");
  return ComplexVector(dense_kernel(m, x.samples()));
}

GaussianVector apply_dense(const DenseQuantizedMatrix& m,
                           const GaussianVector& x) {
  require_size(x.size(), m.n(), "apply_dense");
  return dense_kernel<GaussianInt>(m, x);
}

ComplexVector apply_stages(std::span<const StageMatrix> stages,
                           const ComplexVector& x) {
  return ComplexVector(stage_kernel(
      stages, std::vector<Complex>(x.samples().begin(), x.samples().end())));
}

GaussianVector apply_stages(std::span<const StageMatrix> stages,
                            const GaussianVector& x) {
  return stage_kernel(stages, x);
}

ComplexVector apply_fast(const ComplexVector& x) {
  require_size(x.size(), kSize, "apply_fast");
  return apply_stages(stage_matrices(), x);
}

GaussianVector apply_fast(const GaussianVector& x) {
  require_size(x.size(), kSize, "apply_fast");
  return apply_stages(stage_matrices(), x);
}

ComplexVector apply_exact(const ComplexVector& x) {
  const std::size_t n = x.size();
  const DenseComplexMatrix f = exact_dft_matrix(n);
  std::vector<Complex> y(n);
  for (std::size_t k = 0; k < n; ++k) {
    Complex acc{};
    for (std::size_t c = 0; c < n; ++c) acc += f.at(k, c) * x[c];
    y[k] = acc;
  }
  return ComplexVector(std::move(y));
}

ComplexVector transform(TransformMethod method, const ComplexVector& x) {
  switch (method) {
    case TransformMethod::kExactDft: return apply_exact(x);
    case TransformMethod::kApproxDense: return apply_dense(approx_matrix(), x);
    case TransformMethod::kApproxFast: return apply_fast(x);
  }
  throw ParameterError("unknown transform method");
}

std::vector<GaussianInt> stage_product(std::span<const StageMatrix> stages) {
  if (stages.empty()) throw DimensionError("stage_product: no stages");
  const std::size_t n = stages.front().size();
  // Start from the identity and left-multiply by each stage in turn.
  std::vector<GaussianInt> p(n * n);
  for (std::size_t i = 0; i < n; ++i) p[i * n + i] = {1, 0};
  std::vector<GaussianInt> next(n * n);
  for (const auto& stage : stages) {
    require_size(stage.size(), n, "stage_product");
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) {
        GaussianInt acc{};
        for (const auto& t : stage.row(r)) {
          acc += entry_mul(t.value, p[t.col * n + c]);
        }
        next[r * n + c] = acc;
      }
    }
    std::swap(p, next);
  }
  return p;
}

FactorizationCheck verify_factorization(std::span<const StageMatrix> stages,
                                        const DenseQuantizedMatrix& target) {
  const auto product = stage_product(stages);
  const std::size_t n = target.n();
  require_size(stages.front().size(), n, "verify_factorization");
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      const QuantizedEntry e = target.at(r, c);
      const GaussianInt want{e.re(), e.im()};
      if (product[r * n + c] != want) {
        return {false, Mismatch{r, c, want, product[r * n + c]}};
      }
    }
  }
  return {true, std::nullopt};
}

FactorizationCheck verify_factorization() {
  return verify_factorization(stage_matrices(), approx_matrix());
}

std::string describe(const Mismatch& m) {
  std::ostringstream os;
  os << "row " << m.row << ", col " << m.col << ": expected (" << m.expected.re
     << "," << m.expected.im << "), got (" << m.got.re << "," << m.got.im
     << ")";
  return os.str();
}

}  // namespace approxdft
