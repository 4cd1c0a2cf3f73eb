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

// Machine-readable reports. Keys keep insertion order and every float is
// rounded to 12 significant digits, so identical inputs give
// byte-identical documents.

#ifndef APPROXDFT_REPORT_HPP_
#define APPROXDFT_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "approxdft/complexity.hpp"
#include "approxdft/designer.hpp"
#include "approxdft/transform.hpp"

namespace approxdft {

using Report = nlohmann::ordered_json;

// Fixture perturbations for exercising the verify failure paths.
enum class Injection {
  kNone,
  kFlipSign,      // negates one W5 term: breaks the factorization only
  kExtraNonzero,  // adds a term to W8 row 0: breaks counts and product
};

std::optional<Injection> parse_injection(std::string_view name);

struct VerifyOutcome {
  bool ok = false;
  std::vector<std::string> failed;  // names of failing checks, in order
  Report report;
};

// Runs the factorization identity and the operation-count checks
// ("factorization", "table1_dense", "table1_fast", "table2").
VerifyOutcome run_verify(Injection injection = Injection::kNone);

Report json_number(double v);
Report json_vector(std::span<const Complex> v);

Report transform_report(TransformMethod method, const std::string& digest,
                        const ComplexVector& output,
                        const std::optional<OperationTally>& tally);
Report tally_json(const OperationTally& tally);

Report design_report(const SearchResult& result, double alpha_min,
                     double alpha_max, std::size_t steps);

Report compare_report(const FidelityReport& fidelity,
                      const std::string& digest);

}  // namespace approxdft

#endif  // APPROXDFT_REPORT_HPP_
