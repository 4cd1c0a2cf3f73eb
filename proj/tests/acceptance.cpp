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

// End-to-end acceptance run. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.

#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "approxdft/complexity.hpp"
#include "approxdft/designer.hpp"
#include "approxdft/fixtures.hpp"
#include "approxdft/transform.hpp"
#include "test_support.hpp"

namespace approxdft {
namespace {

struct Criterion {
  const char* name;
  std::function<bool(std::string&)> check;
};

bool factorization_identity(std::string& note) {
  const FactorizationCheck check = verify_factorization();
  if (!check.ok) {
    note = describe(*check.first_mismatch);
    return false;
  }
  // Second route: dense Gaussian-integer products.
  const auto& stages = stage_matrices();
  auto p = testing::to_gaussian_matrix(stages[0].to_dense());
  for (std::size_t i = 1; i < stages.size(); ++i) {
    p = testing::dense_product(testing::to_gaussian_matrix(stages[i].to_dense()),
                               p, kSize);
  }
  if (p != testing::to_gaussian_matrix(approx_matrix())) {
    note = "dense product route disagrees";
    return false;
  }
  note = "W8*...*W1 == approximate matrix, zero tolerance";
  return true;
}

bool table1(std::string& note) {
  const auto dense = count_dense(approx_matrix(), DataKind::kPurelyReal);
  const auto fast = count_fast(stage_matrices(), DataKind::kPurelyReal);
  note = "dense (" + std::to_string(dense.real_multiplications) + ", " +
         std::to_string(dense.real_additions) + "), fast (" +
         std::to_string(fast.real_multiplications) + ", " +
         std::to_string(fast.real_additions) + ")";
  return dense.real_multiplications == 0 && dense.real_additions == 1282 &&
         fast.real_multiplications == 0 && fast.real_additions == 144;
}

bool table2(std::string& note) {
  const auto fast = count_fast(stage_matrices(), DataKind::kPurelyReal);
  note = "per stage [";
  for (std::size_t i = 0; i < fast.per_stage->size(); ++i) {
    note += (i ? ", " : "") + std::to_string((*fast.per_stage)[i]);
  }
  note += "]";
  return *fast.per_stage ==
         std::vector<std::uint64_t>{30, 30, 14, 14, 30, 14, 12, 0};
}

bool fast_dense_equivalence(std::string& note) {
  std::mt19937_64 rng(20260101);
  constexpr int kTrials = 1000;
  for (int t = 0; t < kTrials; ++t) {
    const auto x = testing::random_gaussian(rng, kSize, -128, 128);
    if (apply_fast(x) != apply_dense(approx_matrix(), x)) {
      note = "integer mismatch at trial " + std::to_string(t);
      return false;
    }
  }
  double worst = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    const auto x = testing::random_vector(rng, kSize);
    const auto a = apply_fast(x);
    const auto b = apply_dense(approx_matrix(), x);
    for (std::size_t k = 0; k < kSize; ++k) {
      worst = std::max(worst, std::abs(a[k] - b[k]));
    }
  }
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "%d integer inputs bit-exact; max double deviation %.3g "
                "(tol 1e-9)",
                kTrials, worst);
  note = buf;
  return worst <= 1e-9;
}

bool designer_round_trip(std::string& note) {
  const auto result = search(0.8, 1.3, 501);
  char buf[128];
  std::snprintf(buf, sizeof buf, "best alpha %.6g, score %.12g",
                result.best.alpha, result.best.score);
  note = buf;
  return result.best.accepted() && *result.best.matrix == approx_matrix();
}

bool exact_dft_properties(std::string& note) {
  double worst = 0.0;
  for (std::size_t n : {2u, 4u, 8u, 16u, 32u}) {
    const auto f = exact_dft_matrix(n);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        Complex acc{};
        for (std::size_t c = 0; c < n; ++c) {
          acc += f.at(a, c) * std::conj(f.at(b, c));
        }
        const Complex want = a == b ? Complex(double(n), 0.0) : Complex{};
        worst = std::max(worst, std::abs(acc - want));
      }
    }
  }
  // exp(-j 2 pi 3 n / 32) concentrates in bin 29 under exp(-j...) kernels.
  std::vector<Complex> tone(kSize);
  for (std::size_t n = 0; n < kSize; ++n) tone[n] = testing::dft_entry(3, n, kSize);
  const auto y = apply_exact(ComplexVector(tone));
  double leak = 0.0;
  for (std::size_t k = 0; k < kSize; ++k) {
    if (k != 29) leak = std::max(leak, std::abs(y[k]));
  }
  const double peak_err = std::abs(std::abs(y[29]) - 32.0);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "max |F F^H - N I| %.3g (tol 1e-10); tone peak err %.3g, "
                "leakage %.3g (tol 1e-9)",
                worst, peak_err, leak);
  note = buf;
  return worst <= 1e-10 && peak_err <= 1e-9 && leak <= 1e-9;
}

bool structural_invariants(std::string& note) {
  for (const auto& w : stage_matrices()) {
    for (std::size_t r = 0; r < w.size(); ++r) {
      const auto row = w.row(r);
      if (row.empty() || row.size() > 3) {
        note = "W" + std::to_string(w.index()) + " row " + std::to_string(r) +
               " has " + std::to_string(row.size()) + " nonzeros";
        return false;
      }
      for (const auto& t : row) {
        if (w.index() < 8 && t.value.im() != 0) {
          note = "W" + std::to_string(w.index()) + " is not purely real";
          return false;
        }
      }
    }
  }
  const auto& m = approx_matrix();
  for (std::size_t k = 1; k <= 15; ++k) {
    for (std::size_t c = 0; c < kSize; ++c) {
      if (m.at(32 - k, c) != m.at(k, c).conj()) {
        note = "conjugate symmetry broken at row " + std::to_string(k);
        return false;
      }
    }
  }
  for (std::size_t k = 0; k < kSize; ++k) {
    if (m.at(0, k) != kOne || m.at(k, 0) != kOne) {
      note = "row 0 / column 0 not all ones";
      return false;
    }
  }
  note = "1-3 nonzeros per stage row; W1-W7 real; conjugate rows; unit border";
  return true;
}

}  // namespace
}  // namespace approxdft

int main() {
  using approxdft::Criterion;
  const std::vector<Criterion> criteria = {
      {"factorization identity", approxdft::factorization_identity},
      {"operation counts (dense 1282, fast 144)", approxdft::table1},
      {"per-stage additions", approxdft::table2},
      {"fast/dense equivalence", approxdft::fast_dense_equivalence},
      {"designer round-trip", approxdft::designer_round_trip},
      {"exact DFT oracle properties", approxdft::exact_dft_properties},
      {"fixture structural invariants", approxdft::structural_invariants},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string note;
    bool pass = false;
    try {
      pass = criteria[i].check(note);
    } catch (const std::exception& e) {
      note = std::string("exception: ") + e.what();
    }
    std::printf("[%s] %zu. %s: %s\n", pass ? "PASS" : "FAIL", i + 1,
                criteria[i].name, note.c_str());
    if (!pass) ++failures;
  }
  std::printf("%d/%zu criteria passed\n",
              static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
