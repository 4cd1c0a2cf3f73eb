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

#ifndef APPROXDFT_ERRORS_HPP_
#define APPROXDFT_ERRORS_HPP_

#include <stdexcept>

namespace approxdft {

// Operand shapes disagree (matrix vs vector length, matrix vs matrix).
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class IndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Non-finite samples or malformed input data.
class DataError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A candidate matrix with an all-zero row cannot be normalized.
class DegenerateError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A design sweep produced no admissible candidate.
class EmptyResultError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace approxdft

#endif  // APPROXDFT_ERRORS_HPP_
