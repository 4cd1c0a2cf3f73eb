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
#include <string>
#include <utility>

namespace approxdft {
namespace {

constexpr double signed_copy(int sign, double v) {
  return sign > 0 ? v : (sign < 0 ? -v : 0.0);
}

constexpr std::int64_t signed_copy(int sign, std::int64_t v) {
  return sign > 0 ? v : (sign < 0 ? -v : 0);
}

constexpr double kMaxExactInteger = 9007199254740992.0;  // 2^53

bool is_exact_integer(double v) {
  return std::nearbyint(v) == v && std::fabs(v) <= kMaxExactInteger;
}

}  // namespace

Complex entry_mul(QuantizedEntry e, Complex v) {
  return {signed_copy(e.re(), v.real()) - signed_copy(e.im(), v.imag()),
          signed_copy(e.re(), v.imag()) + signed_copy(e.im(), v.real())};
}

GaussianInt entry_mul(QuantizedEntry e, GaussianInt v) {
  return {signed_copy(e.re(), v.re) - signed_copy(e.im(), v.im),
          signed_copy(e.re(), v.im) + signed_copy(e.im(), v.re)};
}

ComplexVector::ComplexVector(std::vector<Complex> samples)
    : samples_(std::move(samples)) {
  if (samples_.empty()) throw DimensionError("empty signal vector");
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (!std::isfinite(samples_[i].real()) ||
        !std::isfinite(samples_[i].imag())) {
      throw DataError("non-finite sample at index " + std::to_string(i));
    }
  }
}

ComplexVector ComplexVector::zeros(std::size_t n) {
  return ComplexVector(std::vector<Complex>(n));
}

ComplexVector ComplexVector::impulse(std::size_t n, std::size_t at) {
  if (at >= n) throw IndexError("impulse position out of range");
  std::vector<Complex> v(n);
  v[at] = 1.0;
  return ComplexVector(std::move(v));
}

ComplexVector ComplexVector::from_gaussian(const GaussianVector& v) {
  std::vector<Complex> out;
  out.reserve(v.size());
  for (const auto& g : v) {
    out.emplace_back(static_cast<double>(g.re), static_cast<double>(g.im));
  }
  return ComplexVector(std::move(out));
}

std::optional<GaussianVector> ComplexVector::to_gaussian() const {
  GaussianVector out;
  out.reserve(samples_.size());
  for (const auto& s : samples_) {
    if (!is_exact_integer(s.real()) || !is_exact_integer(s.imag())) {
      return std::nullopt;
    }
    out.push_back({static_cast<std::int64_t>(s.real()),
                   static_cast<std::int64_t>(s.imag())});
  }
  return out;
}

DenseQuantizedMatrix::DenseQuantizedMatrix(std::size_t n)
    : n_(n), entries_(n * n) {
  if (n == 0) throw DimensionError("matrix size must be positive");
}

DenseQuantizedMatrix::DenseQuantizedMatrix(std::size_t n,
                                           std::vector<QuantizedEntry> entries)
    : n_(n), entries_(std::move(entries)) {
  if (n == 0) throw DimensionError("matrix size must be positive");
  if (entries_.size() != n * n) {
    throw DimensionError("entry count does not match n*n");
  }
}

DenseQuantizedMatrix DenseQuantizedMatrix::identity(std::size_t n) {
  DenseQuantizedMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, kOne);
  return m;
}

DenseQuantizedMatrix DenseQuantizedMatrix::conj() const {
  DenseQuantizedMatrix out(*this);
  for (auto& e : out.entries_) e = e.conj();
  return out;
}

DenseComplexMatrix::DenseComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {
  if (rows == 0 || cols == 0) {
    throw DimensionError("matrix dimensions must be positive");
  }
}

DenseComplexMatrix::DenseComplexMatrix(const DenseQuantizedMatrix& m)
    : DenseComplexMatrix(m.n(), m.n()) {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    entries_[i] = m.entries()[i].to_complex();
  }
}

DenseComplexMatrix DenseComplexMatrix::conj() const {
  DenseComplexMatrix out(*this);
  for (auto& e : out.entries_) e = std::conj(e);
  return out;
}

double frobenius_distance(const DenseComplexMatrix& a,
                          const DenseComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("frobenius_distance: shape mismatch");
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) {
      sum += std::norm(a.at(r, c) - b.at(r, c));
    }
  }
  return std::sqrt(sum);
}

double row_energy(const DenseComplexMatrix& m, std::size_t k) {
  if (k >= m.rows()) throw IndexError("row_energy: row index out of range");
  double sum = 0.0;
  for (const auto& v : m.row(k)) sum += std::norm(v);
  return std::sqrt(sum);
}

int row_energy_squared(const DenseQuantizedMatrix& m, std::size_t k) {
  if (k >= m.n()) throw IndexError("row_energy: row index out of range");
  int sum = 0;
  for (const auto& e : m.row(k)) sum += e.norm();
  return sum;
}

std::uint64_t content_checksum(const DenseQuantizedMatrix& m) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](int byte) {
    h ^= static_cast<std::uint64_t>(byte);
    h *= 0x100000001b3ULL;
  };
  for (const auto& e : m.entries()) {
    mix(e.re() + 1);
    mix(e.im() + 1);
  }
  return h;
}

}  // namespace approxdft
