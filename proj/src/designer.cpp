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

#include "approxdft/designer.hpp"

#include <cmath>
#include <cstdint>
#include <limits>

#include "approxdft/fixtures.hpp"
#include "approxdft/transform.hpp"

namespace approxdft {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

DesignCandidate rejected(double alpha) { return {alpha, std::nullopt, kInf}; }

// std::round rounds halves away from zero.
std::optional<int> round_lane(double v) {
  const double r = std::round(v);
  if (r < -1.0 || r > 1.0) return std::nullopt;
  return static_cast<int>(r);
}

}  // namespace

DesignCandidate quantize(const DenseComplexMatrix& f, double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ParameterError("expansion factor must be positive and finite");
  }
  if (f.rows() != f.cols()) throw DimensionError("quantize: matrix not square");
  const std::size_t n = f.rows();
  std::vector<QuantizedEntry> entries;
  entries.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (const auto& v : f.row(r)) {
      const auto re = round_lane(alpha * v.real());
      const auto im = round_lane(alpha * v.imag());
      if (!re || !im) return rejected(alpha);
      entries.emplace_back(*re, *im);
    }
  }
  DenseQuantizedMatrix m(n, std::move(entries));
  NormalizationMatrix s;
  try {
    s = normalization(m);
  } catch (const DegenerateError&) {
    return rejected(alpha);
  }
  const double score = frobenius_distance(f, normalized(m, s));
  return {alpha, std::move(m), score};
}

NormalizationMatrix normalization(const DenseQuantizedMatrix& m) {
  NormalizationMatrix s;
  s.diagonal.reserve(m.n());
  for (std::size_t k = 0; k < m.n(); ++k) {
    const int e = row_energy_squared(m, k);
    if (e == 0) throw DegenerateError("candidate has an all-zero row");
    s.diagonal.push_back(1.0 / std::sqrt(static_cast<double>(e)));
  }
  return s;
}

DenseComplexMatrix normalized(const DenseQuantizedMatrix& m,
                              const NormalizationMatrix& s) {
  if (s.diagonal.size() != m.n()) {
    throw DimensionError("normalization size does not match matrix");
  }
  DenseComplexMatrix out(m.n(), m.n());
  for (std::size_t r = 0; r < m.n(); ++r) {
    for (std::size_t c = 0; c < m.n(); ++c) {
      out.at(r, c) = s.diagonal[r] * m.at(r, c).to_complex();
    }
  }
  return out;
}

double grid_alpha(double alpha_min, double alpha_max, std::size_t steps,
                  std::size_t i) {
  if (i + 1 == steps) return alpha_max;
  return alpha_min + (alpha_max - alpha_min) * static_cast<double>(i) /
                         static_cast<double>(steps - 1);
}

SearchResult search(double alpha_min, double alpha_max, std::size_t steps,
                    Execution exec) {
  if (!(alpha_min > 0.0) || !(alpha_min < alpha_max) ||
      !std::isfinite(alpha_max)) {
    throw ParameterError("search requires 0 < alpha_min < alpha_max");
  }
  if (steps < 2) throw ParameterError("search requires at least 2 steps");

  const DenseComplexMatrix f = exact_dft_matrix(kSize);
  std::vector<CurvePoint> curve(steps);
  const auto count = static_cast<std::int64_t>(steps);
  auto evaluate = [&](std::int64_t i) {
    const double alpha = grid_alpha(alpha_min, alpha_max, steps, i);
    curve[i] = {alpha, quantize(f, alpha).score};
  };
  if (exec == Execution::kSerial) {
    for (std::int64_t i = 0; i < count; ++i) evaluate(i);
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (std::int64_t i = 0; i < count; ++i) evaluate(i);
  }

  // Index-ordered scan keeps the tie-break independent of thread timing.
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < curve.size(); ++i) {
    if (!std::isfinite(curve[i].score)) continue;
    if (!best || curve[i].score < curve[*best].score) best = i;
  }
  if (!best) throw EmptyResultError("no admissible candidate in range");
  return {quantize(f, curve[*best].alpha), std::move(curve)};
}

FidelityReport fidelity_report(const ComplexVector& x) {
  if (x.size() != kSize) {
    throw DimensionError("fidelity_report: expected length 32");
  }
  const DenseQuantizedMatrix& m = approx_matrix();
  const NormalizationMatrix s = normalization(m);
  const ComplexVector raw = apply_dense(m, x);
  const ComplexVector exact = apply_exact(x);

  FidelityReport rep;
  double diff_sq = 0.0;
  double exact_sq = 0.0;
  for (std::size_t k = 0; k < kSize; ++k) {
    const Complex a = s.diagonal[k] * raw[k];
    const double d = std::abs(a - exact[k]);
    rep.approx.push_back(a);
    rep.exact.push_back(exact[k]);
    rep.per_bin_error.push_back(d);
    diff_sq += d * d;
    exact_sq += std::norm(exact[k]);
  }
  rep.mse = diff_sq / static_cast<double>(kSize);
  if (exact_sq > 0.0) {
    rep.relative_error = std::sqrt(diff_sq / exact_sq);
  } else {
    rep.relative_error = diff_sq > 0.0 ? kInf : 0.0;
  }
  return rep;
}

}  // namespace approxdft
