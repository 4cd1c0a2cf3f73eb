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

// Gaussian-integer entries drawn from the trivial-multiplicand alphabet
// {0, +-1, +-j, +-1+-j}, exact integer vectors, and the dense matrices the
// transform and design code is built on.

#ifndef APPROXDFT_NUMERIC_HPP_
#define APPROXDFT_NUMERIC_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "approxdft/errors.hpp"

namespace approxdft {

using Complex = std::complex<double>;

// A matrix element whose real and imaginary parts are each in {-1, 0, +1}.
// Multiplying a sample by one of these needs sign changes, lane swaps and
// at most one addition per lane, never a real multiplication.
class QuantizedEntry {
 public:
  constexpr QuantizedEntry() = default;
  constexpr QuantizedEntry(int re, int im)
      : re_(checked(re)), im_(checked(im)) {}

  constexpr int re() const { return re_; }
  constexpr int im() const { return im_; }
  constexpr bool is_zero() const { return re_ == 0 && im_ == 0; }
  // Unit-magnitude entries (+-1, +-j) have squared modulus 1, the
  // +-1+-j family has squared modulus 2.
  constexpr int norm() const { return re_ * re_ + im_ * im_; }

  constexpr QuantizedEntry conj() const { return {re_, -im_}; }
  constexpr QuantizedEntry operator-() const { return {-re_, -im_}; }

  Complex to_complex() const { return {double(re_), double(im_)}; }

  friend constexpr bool operator==(QuantizedEntry, QuantizedEntry) = default;

 private:
  static constexpr std::int8_t checked(int v) {
    if (v < -1 || v > 1) throw ParameterError("entry lane outside {-1,0,1}");
    return static_cast<std::int8_t>(v);
  }

  std::int8_t re_ = 0;
  std::int8_t im_ = 0;
};

inline constexpr QuantizedEntry kZero{0, 0};
inline constexpr QuantizedEntry kOne{1, 0};
inline constexpr QuantizedEntry kMinusOne{-1, 0};
inline constexpr QuantizedEntry kJ{0, 1};
inline constexpr QuantizedEntry kMinusJ{0, -1};
inline constexpr QuantizedEntry kGamma{1, 1};
inline constexpr QuantizedEntry kGammaConj{1, -1};

// All nine alphabet members, zero first.
inline constexpr std::array<QuantizedEntry, 9> kAlphabet = {
    QuantizedEntry{0, 0},  QuantizedEntry{1, 0},   QuantizedEntry{-1, 0},
    QuantizedEntry{0, 1},  QuantizedEntry{0, -1},  QuantizedEntry{1, 1},
    QuantizedEntry{1, -1}, QuantizedEntry{-1, 1},  QuantizedEntry{-1, -1}};

// Exact complex integer used for bit-exact transform and product checks.
struct GaussianInt {
  std::int64_t re = 0;
  std::int64_t im = 0;

  GaussianInt& operator+=(GaussianInt o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  friend GaussianInt operator+(GaussianInt a, GaussianInt b) { return a += b; }
  friend GaussianInt operator*(GaussianInt a, GaussianInt b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend constexpr bool operator==(GaussianInt, GaussianInt) = default;
};

using GaussianVector = std::vector<GaussianInt>;

// (e.re + j e.im) * v using sign copies only.
Complex entry_mul(QuantizedEntry e, Complex v);
GaussianInt entry_mul(QuantizedEntry e, GaussianInt v);

// Length-N sequence of finite complex samples, N >= 1.
class ComplexVector {
 public:
  // Throws DimensionError when empty, DataError on NaN/Inf samples.
  explicit ComplexVector(std::vector<Complex> samples);

  static ComplexVector zeros(std::size_t n);
  static ComplexVector impulse(std::size_t n, std::size_t at = 0);
  static ComplexVector from_gaussian(const GaussianVector& v);

  std::size_t size() const { return samples_.size(); }
  std::span<const Complex> samples() const { return samples_; }
  const Complex& operator[](std::size_t i) const { return samples_[i]; }
  auto begin() const { return samples_.begin(); }
  auto end() const { return samples_.end(); }

  // Exact integer view when every lane is an integer of magnitude <= 2^53.
  std::optional<GaussianVector> to_gaussian() const;

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<Complex> samples_;
};

// Square n x n matrix of alphabet entries, row-major.
class DenseQuantizedMatrix {
 public:
  explicit DenseQuantizedMatrix(std::size_t n);
  DenseQuantizedMatrix(std::size_t n, std::vector<QuantizedEntry> entries);

  static DenseQuantizedMatrix identity(std::size_t n);

  std::size_t n() const { return n_; }
  QuantizedEntry at(std::size_t row, std::size_t col) const {
    return entries_[row * n_ + col];
  }
  void set(std::size_t row, std::size_t col, QuantizedEntry e) {
    entries_[row * n_ + col] = e;
  }
  std::span<const QuantizedEntry> row(std::size_t r) const {
    return std::span<const QuantizedEntry>(entries_).subspan(r * n_, n_);
  }
  std::span<const QuantizedEntry> entries() const { return entries_; }

  DenseQuantizedMatrix conj() const;

  friend bool operator==(const DenseQuantizedMatrix&,
                         const DenseQuantizedMatrix&) = default;

 private:
  std::size_t n_;
  std::vector<QuantizedEntry> entries_;
};

class DenseComplexMatrix {
 public:
  DenseComplexMatrix(std::size_t rows, std::size_t cols);
  explicit DenseComplexMatrix(const DenseQuantizedMatrix& m);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const Complex& at(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }
  Complex& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  std::span<const Complex> row(std::size_t r) const {
    return std::span<const Complex>(entries_).subspan(r * cols_, cols_);
  }

  DenseComplexMatrix conj() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Complex> entries_;
};

// sqrt(sum |a - b|^2). Throws DimensionError on shape mismatch.
double frobenius_distance(const DenseComplexMatrix& a,
                          const DenseComplexMatrix& b);

// sqrt(sum_n |m(k, n)|^2). Throws IndexError when k is out of range.
double row_energy(const DenseComplexMatrix& m, std::size_t k);
// Squared row energy of an alphabet matrix; exact.
int row_energy_squared(const DenseQuantizedMatrix& m, std::size_t k);

// FNV-1a over the row-major entries (lane values offset by +1, re then im).
std::uint64_t content_checksum(const DenseQuantizedMatrix& m);

}  // namespace approxdft

#endif  // APPROXDFT_NUMERIC_HPP_
