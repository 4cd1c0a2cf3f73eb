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

// Expansion-factor design of multiplierless DFT approximations.
//
// A candidate is obtained by scaling the exact DFT matrix by alpha and
// rounding each lane half-away-from-zero. Candidates with a lane outside
// {-1, 0, 1} or with an all-zero row are rejected. Accepted candidates are
// row-normalized to unit energy (S = diag(1 / ||row_k||)) and scored by
// ||F - S * Fhat||_F. The sweep keeps the lowest score, smallest alpha on
// ties.

#ifndef APPROXDFT_DESIGNER_HPP_
#define APPROXDFT_DESIGNER_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "approxdft/batch.hpp"
#include "approxdft/numeric.hpp"

namespace approxdft {

inline constexpr double kDefaultAlphaMin = 0.8;
inline constexpr double kDefaultAlphaMax = 1.3;
inline constexpr std::size_t kDefaultSteps = 501;

struct DesignCandidate {
  double alpha = 0.0;
  std::optional<DenseQuantizedMatrix> matrix;  // empty when rejected
  double score = 0.0;                          // +inf when rejected

  bool accepted() const { return matrix.has_value(); }
};

struct NormalizationMatrix {
  std::vector<double> diagonal;
};

// Throws ParameterError for alpha <= 0 (or non-finite) and
// DimensionError when f is not square.
DesignCandidate quantize(const DenseComplexMatrix& f, double alpha);

// Throws DegenerateError when m has an all-zero row.
NormalizationMatrix normalization(const DenseQuantizedMatrix& m);

// S * m.
DenseComplexMatrix normalized(const DenseQuantizedMatrix& m,
                              const NormalizationMatrix& s);

struct CurvePoint {
  double alpha = 0.0;
  double score = 0.0;  // +inf for rejected grid points
};

struct SearchResult {
  DesignCandidate best;
  std::vector<CurvePoint> curve;
};

// Grid point i of a uniform sweep with `steps` points, endpoints included.
double grid_alpha(double alpha_min, double alpha_max, std::size_t steps,
                  std::size_t i);

// Sweeps the 32-point exact DFT. Throws ParameterError unless
// 0 < alpha_min < alpha_max and steps >= 2; throws EmptyResultError when
// every grid point is rejected. The result does not depend on `exec`.
SearchResult search(double alpha_min, double alpha_max, std::size_t steps,
                    Execution exec = Execution::kParallel);

struct FidelityReport {
  std::vector<double> per_bin_error;  // |approx_k - exact_k|
  double mse = 0.0;
  double relative_error = 0.0;  // ||approx - exact|| / ||exact||, 0 if both 0
  std::vector<Complex> approx;  // S * Fhat * x
  std::vector<Complex> exact;   // F * x
};

// Compares the normalized fixture transform against the exact DFT.
// Throws DimensionError when x.size() != 32.
FidelityReport fidelity_report(const ComplexVector& x);

}  // namespace approxdft

#endif  // APPROXDFT_DESIGNER_HPP_
