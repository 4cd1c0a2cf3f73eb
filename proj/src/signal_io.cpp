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

#include "approxdft/signal_io.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iterator>
#include <vector>

namespace approxdft {
namespace {

constexpr int kSignificantDigits = 12;

std::string_view trim(std::string_view s) {
  constexpr std::string_view kSpace = " \t\r";
  const auto b = s.find_first_not_of(kSpace);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(kSpace);
  return s.substr(b, e - b + 1);
}

double parse_field(std::string_view field, std::size_t line) {
  field = trim(field);
  if (field.empty()) throw SignalParseError(line, "empty field");
  // from_chars rejects a leading '+'.
  if (field.front() == '+') field.remove_prefix(1);
  double v = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw SignalParseError(line, "not a number: '" + std::string(field) + "'");
  }
  if (!std::isfinite(v)) {
    throw SignalParseError(line, "non-finite value '" + std::string(field) + "'");
  }
  return v;
}

}  // namespace

ComplexVector parse_signal(std::string_view text) {
  std::vector<Complex> samples;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    if (comma == std::string_view::npos) {
      samples.emplace_back(parse_field(line, line_no), 0.0);
      continue;
    }
    const auto rest = line.substr(comma + 1);
    if (rest.find(',') != std::string_view::npos) {
      throw SignalParseError(line_no, "expected '<re>' or '<re>,<im>'");
    }
    samples.emplace_back(parse_field(line.substr(0, comma), line_no),
                         parse_field(rest, line_no));
  }
  if (samples.empty()) throw SignalParseError(0, "no samples found");
  return ComplexVector(std::move(samples));
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path.string() + "'");
  return std::string(std::istreambuf_iterator<char>(in),
                     std::istreambuf_iterator<char>());
}

std::string format_number(double v) {
  if (v == 0.0) return "0";
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v,
                                       std::chars_format::general,
                                       kSignificantDigits);
  return std::string(buf.data(), ptr);
}

double round_significant(double v) {
  if (!std::isfinite(v)) return v;
  const std::string s = format_number(v);
  double out = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), out);
  return out;
}

std::string format_signal(const ComplexVector& x) {
  std::string out;
  for (const auto& s : x) {
    out += format_number(s.real());
    out += ',';
    out += format_number(s.imag());
    out += '\n';
  }
  return out;
}

std::string fnv1a64_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::array<char, 17> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + 16, h, 16);
  std::string hex(buf.data(), ptr);
  return std::string(16 - hex.size(), '0') + hex;
}

}  // namespace approxdft
