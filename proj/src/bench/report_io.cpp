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

#include <charconv>
#include <chrono>
#include <ctime>
#include <fstream>
#include <sstream>

#include "copra/benchmark.hpp"
#include "copra/error.hpp"
#include "copra/kernels.hpp"
#include "json.hpp"

namespace copra {
namespace {

std::string shortest(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string format_csv(const BenchmarkReport& report) {
  std::ostringstream out;
  out << kCsvHeader << '\n';
  for (const ReportRow& row : report.rows) {
    out << to_string(row.scenario) << ',' << shortest(row.sweep_db) << ','
        << to_string(row.method) << ',' << shortest(row.mean_nmse_db) << ','
        << (row.ber ? shortest(*row.ber) : std::string()) << ',' << row.trials
        << ',' << shortest(row.fallback_rate) << '\n';
  }
  return out.str();
}

std::string format_manifest(const BenchmarkReport& report,
                            std::string_view timestamp) {
  const ScenarioConfig& cfg = report.config;
  const SolverConfig& s = report.solver;
  nlohmann::ordered_json j;
  j["tool"] = "copra";
  j["version"] = std::string(kToolVersion);
  j["timestamp"] = std::string(timestamp);
  j["master_seed"] = cfg.master_seed;
  j["scenario"] = {
      {"id", to_string(cfg.id)},
      {"rows", cfg.rows},
      {"cols", cfg.cols},
      {"field", to_string(cfg.field)},
      {"signal_kind", to_string(cfg.signal)},
      {"sweep_axis", to_string(cfg.axis)},
      {"sweep", cfg.sweep},
      {"trials", cfg.trials},
  };
  std::vector<std::string> methods;
  for (Method m : report.methods) methods.emplace_back(to_string(m));
  j["methods"] = methods;
  j["solver"] = {
      {"rho_rel", s.rho_rel},
      {"step_tol", s.step_tol},
      {"max_iter", s.max_iter},
      {"grid_lo_factor", s.grid_lo_factor},
      {"grid_hi", s.grid_hi},
      {"grid_points_per_decade", s.grid_points_per_decade},
      {"min_start", s.min_start},
  };
  j["selector_grid"] = {{"points", 200}, {"lo_over_sigma_max_sq", 1e-6},
                        {"hi_over_sigma_max_sq", 1e2}};
  j["kernel_backend"] = std::string(kernels::to_string(kernels::active().backend));
  return j.dump(2) + "\n";
}

std::filesystem::path manifest_path_for(const std::filesystem::path& csv_path) {
  std::filesystem::path p = csv_path;
  p.replace_extension(".manifest.json");
  return p;
}

void write_report(const BenchmarkReport& report,
                  const std::filesystem::path& csv_path) {
  write_file(csv_path, format_csv(report));
  write_file(manifest_path_for(csv_path), format_manifest(report, utc_timestamp()));
}

std::string utc_timestamp() {
  const std::time_t now =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace copra
