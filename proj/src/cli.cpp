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

#include "approxdft/cli.hpp"

#include <fstream>
#include <optional>

#include "CLI11.hpp"

#include "approxdft/complexity.hpp"
#include "approxdft/designer.hpp"
#include "approxdft/report.hpp"
#include "approxdft/signal_io.hpp"
#include "approxdft/transform.hpp"

namespace approxdft::cli {
namespace {

struct Options {
  std::string method = "fast";
  std::string input;
  std::string output;
  bool json = false;
  bool tally = false;
  double alpha_min = kDefaultAlphaMin;
  double alpha_max = kDefaultAlphaMax;
  std::size_t steps = kDefaultSteps;
  std::string inject = "none";
};

struct LoadedSignal {
  ComplexVector samples;
  std::string digest;
};

// Throws DataError; callers map it to kExitUsage.
LoadedSignal load_signal(const std::string& path) {
  const std::string text = read_text_file(path);
  try {
    return {parse_signal(text), fnv1a64_hex(text)};
  } catch (const SignalParseError& e) {
    throw DataError(path + ": " + e.what());
  }
}

void emit(std::ostream& out, const Report& r) { out << r.dump(2) << '\n'; }

int cmd_transform(const Options& o, std::ostream& out, std::ostream& err) {
  const auto method = parse_method(o.method);
  if (!method) {
    err << "error: unknown method '" << o.method << "'\n";
    return kExitUsage;
  }
  const LoadedSignal sig = load_signal(o.input);
  if (*method != TransformMethod::kExactDft && sig.samples.size() != kSize) {
    err << "error: " << o.input << ": expected 32 samples, got "
        << sig.samples.size() << '\n';
    return kExitUsage;
  }

  std::optional<ComplexVector> y;
  if (*method != TransformMethod::kExactDft) {
    if (auto g = sig.samples.to_gaussian()) {
      y = ComplexVector::from_gaussian(
          *method == TransformMethod::kApproxDense
              ? apply_dense(approx_matrix(), *g)
              : apply_fast(*g));
    }
  }
  if (!y) y = transform(*method, sig.samples);

  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
    if (!f) {
      err << "error: cannot write '" << o.output << "'\n";
      return kExitUsage;
    }
    f << format_signal(*y);
  }
  if (o.json) {
    std::optional<OperationTally> tally;
    if (o.tally) {
      const DataKind kind = classify(sig.samples);
      if (*method == TransformMethod::kApproxDense) {
        tally = count_dense(approx_matrix(), kind);
      } else if (*method == TransformMethod::kApproxFast) {
        tally = count_fast(stage_matrices(), kind);
      }
    }
    emit(out, transform_report(*method, sig.digest, *y, tally));
  } else if (o.output.empty()) {
    out << format_signal(*y);
  }
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  const auto injection = parse_injection(o.inject);
  if (!injection) {
    err << "error: unknown injection '" << o.inject << "'\n";
    return kExitUsage;
  }
  const VerifyOutcome v = run_verify(*injection);
  if (o.json) {
    emit(out, v.report);
  } else {
    for (const auto& c : v.report["checks"]) {
      out << c["name"].get<std::string>() << ": "
          << c["status"].get<std::string>() << '\n';
    }
  }
  if (!v.ok) {
    err << "verification failed:";
    for (const auto& name : v.failed) err << ' ' << name;
    err << '\n';
    return kExitFailed;
  }
  return kExitOk;
}

int cmd_design(const Options& o, std::ostream& out, std::ostream& err) {
  SearchResult result;
  try {
    result = search(o.alpha_min, o.alpha_max, o.steps);
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const EmptyResultError&) {
    err << "error: no admissible candidate\n";
    return kExitFailed;
  }
  const Report r = design_report(result, o.alpha_min, o.alpha_max, o.steps);
  if (o.json) {
    emit(out, r);
  } else {
    out << "best_alpha: " << format_number(result.best.alpha) << '\n'
        << "best_score: " << format_number(result.best.score) << '\n'
        << "matches_fixture: "
        << (r["matches_fixture"].get<bool>() ? "true" : "false") << '\n'
        << "accepted: " << r["curve"]["accepted"].get<std::size_t>() << '/'
        << o.steps << '\n';
  }
  return kExitOk;
}

int cmd_compare(const Options& o, std::ostream& out, std::ostream& err) {
  const LoadedSignal sig = load_signal(o.input);
  if (sig.samples.size() != kSize) {
    err << "error: " << o.input << ": expected 32 samples, got "
        << sig.samples.size() << '\n';
    return kExitUsage;
  }
  const FidelityReport f = fidelity_report(sig.samples);
  if (o.json) {
    emit(out, compare_report(f, sig.digest));
  } else {
    out << "mse: " << format_number(f.mse) << '\n'
        << "relative_error: " << format_number(f.relative_error) << '\n';
    for (std::size_t k = 0; k < f.per_bin_error.size(); ++k) {
      out << "bin " << k << ": " << format_number(f.per_bin_error[k]) << '\n';
    }
  }
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  Options o;
  CLI::App app{"32-point multiplierless approximate DFT toolkit", "approxdft"};
  app.require_subcommand(1);

  auto* transform_cmd = app.add_subcommand("transform", "Transform a signal file");
  transform_cmd->add_option("--method", o.method, "exact | dense | fast")
      ->check(CLI::IsMember({"exact", "dense", "fast"}));
  transform_cmd->add_option("--input", o.input, "Signal file")->required();
  transform_cmd->add_option("--output", o.output, "Spectrum file to write");
  transform_cmd->add_flag("--json", o.json, "Emit a JSON report to stdout");
  transform_cmd->add_flag("--tally", o.tally,
                          "Include operation counts in the JSON report");

  auto* verify_cmd = app.add_subcommand(
      "verify", "Check the factorization and the operation counts");
  verify_cmd->add_flag("--json", o.json, "Emit a JSON report to stdout");
  // Test hook; hidden from --help.
  verify_cmd->add_option("--inject", o.inject)->group("");

  auto* design_cmd = app.add_subcommand(
      "design", "Sweep the expansion factor and report the best candidate");
  design_cmd->add_option("--alpha-min", o.alpha_min)->capture_default_str();
  design_cmd->add_option("--alpha-max", o.alpha_max)->capture_default_str();
  design_cmd->add_option("--steps", o.steps)->capture_default_str();
  design_cmd->add_flag("--json", o.json, "Emit a JSON report to stdout");

  auto* compare_cmd = app.add_subcommand(
      "compare", "Compare the normalized approximation with the exact DFT");
  compare_cmd->add_option("--input", o.input, "Signal file")->required();
  compare_cmd->add_flag("--json", o.json, "Emit a JSON report to stdout");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*transform_cmd) return cmd_transform(o, out, err);
    if (*verify_cmd) return cmd_verify(o, out, err);
    if (*design_cmd) return cmd_design(o, out, err);
    if (*compare_cmd) return cmd_compare(o, out, err);
  } catch (const DataError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DimensionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace approxdft::cli
