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

// Plain-text signal files: one sample per line, "<re>" or "<re>,<im>".
// Blank lines and lines starting with '#' are skipped. Numbers are parsed
// and printed locale-independently; output uses 12 significant digits.

#ifndef APPROXDFT_SIGNAL_IO_HPP_
#define APPROXDFT_SIGNAL_IO_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "approxdft/errors.hpp"
#include "approxdft/numeric.hpp"

namespace approxdft {

class SignalParseError : public DataError {
 public:
  SignalParseError(std::size_t line, const std::string& what)
      : DataError("line " + std::to_string(line) + ": " + what), line_(line) {}

  // 1-based; 0 when the error is not tied to a line (e.g. empty file).
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

ComplexVector parse_signal(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);

// Shortest "%.12g"-style rendering; negative zero prints as "0".
std::string format_number(double v);
// v rounded to 12 significant digits (what format_number prints).
double round_significant(double v);

std::string format_signal(const ComplexVector& x);

// FNV-1a 64-bit hash, hex encoded.
std::string fnv1a64_hex(std::string_view bytes);

}  // namespace approxdft

#endif  // APPROXDFT_SIGNAL_IO_HPP_
