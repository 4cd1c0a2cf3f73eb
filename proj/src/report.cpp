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

#include "approxdft/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <set>

#include "approxdft/fixtures.hpp"
#include "approxdft/signal_io.hpp"

namespace approxdft {
namespace {

// Published operation counts for purely real input.
constexpr std::uint64_t kDenseAdditions = 1282;
constexpr std::uint64_t kFastAdditions = 144;
const std::vector<std::uint64_t> kStageAdditions = {30, 30, 14, 14,
                                                    30, 14, 12, 0};

std::vector<StageMatrix> injected_stages(Injection injection) {
  std::vector<StageMatrix> stages = stage_matrices();
  switch (injection) {
    case Injection::kNone:
      break;
    case Injection::kFlipSign: {
      const SparseTerm t = stages[4].row(0).front();
      stages[4] = stages[4].with_entry(0, t.col, -t.value);
      break;
    }
    case Injection::kExtraNonzero:
      stages[7] = stages[7].with_entry(0, 1, kOne);
      break;
  }
  return stages;
}

Report check(const std::string& name, bool pass, Report detail) {
  Report c;
  c["name"] = name;
  c["status"] = pass ? "pass" : "fail";
  c["detail"] = std::move(detail);
  return c;
}

Report counts(std::uint64_t mult, std::uint64_t add) {
  Report r;
  r["real_multiplications"] = mult;
  r["real_additions"] = add;
  return r;
}

}  // namespace

std::optional<Injection> parse_injection(std::string_view name) {
  if (name == "none") return Injection::kNone;
  if (name == "flip-sign") return Injection::kFlipSign;
  if (name == "extra-nonzero") return Injection::kExtraNonzero;
  return std::nullopt;
}

Report json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  return round_significant(v);
}

Report json_vector(std::span<const Complex> v) {
  Report arr = Report::array();
  for (const auto& z : v) {
    arr.push_back(Report::array({json_number(z.real()), json_number(z.imag())}));
  }
  return arr;
}

Report tally_json(const OperationTally& tally) {
  Report r = counts(tally.real_multiplications, tally.real_additions);
  if (tally.per_stage) r["per_stage_additions"] = *tally.per_stage;
  return r;
}

VerifyOutcome run_verify(Injection injection) {
  const std::vector<StageMatrix> stages = injected_stages(injection);
  const DenseQuantizedMatrix& target = approx_matrix();

  VerifyOutcome out;
  Report checks = Report::array();
  auto record = [&](const std::string& name, bool pass, Report detail) {
    if (!pass) out.failed.push_back(name);
    checks.push_back(check(name, pass, std::move(detail)));
  };

  const FactorizationCheck fact = verify_factorization(stages, target);
  Report fact_detail = Report::object();
  if (fact.first_mismatch) {
    fact_detail["first_mismatch"] = describe(*fact.first_mismatch);
  }
  record("factorization", fact.ok, std::move(fact_detail));

  const OperationTally dense = count_dense(target, DataKind::kPurelyReal);
  const OperationTally fast = count_fast(stages, DataKind::kPurelyReal);
  {
    Report d;
    d["expected"] = counts(0, kDenseAdditions);
    d["got"] = counts(dense.real_multiplications, dense.real_additions);
    record("table1_dense",
           dense.real_multiplications == 0 &&
               dense.real_additions == kDenseAdditions,
           std::move(d));
  }
  {
    Report d;
    d["expected"] = counts(0, kFastAdditions);
    d["got"] = counts(fast.real_multiplications, fast.real_additions);
    record("table1_fast",
           fast.real_multiplications == 0 &&
               fast.real_additions == kFastAdditions,
           std::move(d));
  }
  {
    Report d;
    d["expected"] = kStageAdditions;
    d["got"] = *fast.per_stage;
    record("table2", *fast.per_stage == kStageAdditions, std::move(d));
  }

  out.ok = out.failed.empty();
  out.report["command"] = "verify";
  out.report["ok"] = out.ok;
  out.report["checks"] = std::move(checks);
  return out;
}

Report transform_report(TransformMethod method, const std::string& digest,
                        const ComplexVector& output,
                        const std::optional<OperationTally>& tally) {
  Report r;
  r["command"] = "transform";
  r["method"] = std::string(to_string(method));
  r["input_digest"] = digest;
  r["length"] = output.size();
  r["output"] = json_vector(output.samples());
  if (tally) r["tally"] = tally_json(*tally);
  return r;
}

Report design_report(const SearchResult& result, double alpha_min,
                     double alpha_max, std::size_t steps) {
  std::size_t accepted = 0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  std::set<double> distinct;
  for (const auto& p : result.curve) {
    if (!std::isfinite(p.score)) continue;
    ++accepted;
    lo = std::min(lo, p.score);
    hi = std::max(hi, p.score);
    distinct.insert(p.score);
  }

  Report r;
  r["command"] = "design";
  r["alpha_min"] = json_number(alpha_min);
  r["alpha_max"] = json_number(alpha_max);
  r["steps"] = steps;
  r["best_alpha"] = json_number(result.best.alpha);
  r["best_score"] = json_number(result.best.score);
  r["matches_fixture"] =
      result.best.matrix.has_value() && *result.best.matrix == approx_matrix();
  Report curve;
  curve["accepted"] = accepted;
  curve["rejected"] = result.curve.size() - accepted;
  curve["min_score"] = json_number(lo);
  curve["max_score"] = json_number(hi);
  curve["distinct_scores"] = distinct.size();
  r["curve"] = std::move(curve);
  return r;
}

Report compare_report(const FidelityReport& fidelity,
                      const std::string& digest) {
  Report r;
  r["command"] = "compare";
  r["input_digest"] = digest;
  r["mse"] = json_number(fidelity.mse);
  r["relative_error"] = json_number(fidelity.relative_error);
  r["max_error"] = json_number(*std::max_element(
      fidelity.per_bin_error.begin(), fidelity.per_bin_error.end()));
  Report bins = Report::array();
  for (double e : fidelity.per_bin_error) bins.push_back(json_number(e));
  r["per_bin_error"] = std::move(bins);
  return r;
}

}  // namespace approxdft
