/* Copyright 2026 The copra-rmt Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#ifndef COPRA_BENCHMARK_HPP_
#define COPRA_BENCHMARK_HPP_

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "copra/estimators.hpp"
#include "copra/root_solver.hpp"
#include "copra/scenario.hpp"

namespace copra {

inline constexpr std::string_view kToolVersion = "0.1.0";
inline constexpr std::string_view kCsvHeader =
    "scenario,sweep_db,method,mean_nmse_db,ber,trials,fallback_rate";

struct MethodOutcome {
  double nmse = 0.0;
  std::optional<double> ber;
  double gamma_used = 0.0;
  bool converged = true;
  bool fallback_used = false;
  bool failed = false;
};

struct TrialRecord {
  ScenarioId scenario = ScenarioId::kS1;
  double sweep_db = 0.0;
  int trial_index = 0;
  std::vector<MethodOutcome> outcomes;  // one per requested method, in order
};

struct ReportRow {
  ScenarioId scenario = ScenarioId::kS1;
  double sweep_db = 0.0;
  Method method = Method::kLs;
  double mean_nmse_db = 0.0;  // 10 log10(mean linear NMSE)
  std::optional<double> ber;
  int trials = 0;
  double fallback_rate = 0.0;  // share of trials with fallback or failure
};

struct BenchmarkOptions {
  SolverConfig solver;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct BenchmarkReport {
  ScenarioConfig config;
  std::vector<Method> methods;
  SolverConfig solver;
  std::vector<ReportRow> rows;  // sweep-major, methods in request order
  std::vector<TrialRecord> records;
};

// Runs every method on one instance through a single decomposition. Solver
// failures are folded into the outcome flags; nothing is thrown for them.
template <typename Scalar>
std::vector<MethodOutcome> evaluate_trial(const ModelInstance<Scalar>& inst,
                                          const std::vector<Method>& methods,
                                          const SolverConfig& solver);

// Fixed-order reduction of trial records into report rows.
std::vector<ReportRow> aggregate(const ScenarioConfig& cfg,
                                 const std::vector<Method>& methods,
                                 const std::vector<TrialRecord>& records);

// Results depend only on (cfg, methods, solver), not on thread count or
// completion order.
BenchmarkReport run_benchmark(const ScenarioConfig& cfg,
                              const std::vector<Method>& methods,
                              const BenchmarkOptions& options = {});

// CSV with kCsvHeader. Doubles use shortest round-trip formatting; ber is
// empty when the scenario has no bits.
std::string format_csv(const BenchmarkReport& report);

// Manifest JSON: resolved scenario and solver config, seed, methods, tool
// version, kernel backend and the given timestamp.
std::string format_manifest(const BenchmarkReport& report,
                            std::string_view timestamp);

// results.csv -> results.manifest.json
std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path);

// Writes the CSV and its manifest; throws IoError naming the file.
void write_report(const BenchmarkReport& report,
                  const std::filesystem::path& csv_path);

std::string utc_timestamp();

}  // namespace copra

#endif  // COPRA_BENCHMARK_HPP_
