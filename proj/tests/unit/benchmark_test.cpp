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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "copra/benchmark.hpp"
#include "copra/error.hpp"
#include "copra/qam8.hpp"
#include "json.hpp"

namespace copra {
namespace {

ScenarioConfig small(ScenarioId id, int trials, std::vector<double> sweep) {
  ScenarioConfig cfg = ScenarioConfig::preset(id);
  cfg.rows = 24;
  cfg.cols = id == ScenarioId::kS1 ? 20 : 24;
  cfg.trials = trials;
  cfg.sweep = std::move(sweep);
  cfg.master_seed = 99;
  return cfg;
}

const std::vector<Method> kAll = {Method::kCopra, Method::kLs, Method::kLmmse, Method::kGcv,
                                  Method::kQuasiOpt};

TEST(Benchmark, CsvHeaderIsExact) {
  BenchmarkReport empty;
  EXPECT_EQ(format_csv(empty),
            "scenario,sweep_db,method,mean_nmse_db,ber,trials,fallback_rate\n");
}

TEST(Benchmark, SingleTrialReplay) {
  ScenarioConfig cfg = small(ScenarioId::kS2, 1, {10.0});
  cfg.rows = 4;
  cfg.cols = 4;
  BenchmarkOptions opt;
  opt.threads = 1;
  const auto report = run_benchmark(cfg, {Method::kLs}, opt);
  ASSERT_EQ(report.rows.size(), 1u);

  const auto inst = std::get<ModelInstance<double>>(generate_instance(cfg, 10.0, 0));
  const auto dec = decompose(inst.h, inst.y).decomposition;
  const double want = nmse(inst.x_true, ls_estimate(dec, inst.y).x_hat);
  EXPECT_NEAR(report.rows[0].mean_nmse_db, 10.0 * std::log10(want), 1e-12);
  EXPECT_EQ(report.rows[0].trials, 1);
  EXPECT_FALSE(report.rows[0].ber.has_value());

  const std::string csv = format_csv(report);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("s2,10,ls,", 0), 0u) << row;
  EXPECT_NE(row.find(",,1,0"), std::string::npos) << row;
}

TEST(Benchmark, AggregationIdentity) {
  const auto cfg = small(ScenarioId::kS1, 6, {0.0, 10.0});
  const auto report = run_benchmark(cfg, kAll);
  ASSERT_EQ(report.rows.size(), cfg.sweep.size() * kAll.size());
  ASSERT_EQ(report.records.size(), 12u);
  for (const ReportRow& row : report.rows) {
    const auto m = static_cast<std::size_t>(
        std::find(kAll.begin(), kAll.end(), row.method) - kAll.begin());
    double sum = 0;
    int n = 0;
    for (const TrialRecord& rec : report.records) {
      if (rec.sweep_db != row.sweep_db) continue;
      EXPECT_GE(rec.outcomes[m].nmse, 0.0);
      sum += rec.outcomes[m].nmse;
      ++n;
    }
    EXPECT_EQ(n, cfg.trials);
    EXPECT_EQ(row.trials, cfg.trials);
    EXPECT_NEAR(row.mean_nmse_db, 10.0 * std::log10(sum / n), 1e-12);
  }
}

TEST(Benchmark, DeterministicAcrossRunsAndThreadCounts) {
  const auto cfg = small(ScenarioId::kS3, 5, {0.0, 9.0});
  BenchmarkOptions one, many;
  one.threads = 1;
  many.threads = 4;
  const std::string a = format_csv(run_benchmark(cfg, kAll, one));
  const std::string b = format_csv(run_benchmark(cfg, kAll, many));
  const std::string c = format_csv(run_benchmark(cfg, kAll, one));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a, c);
  auto other = cfg;
  other.master_seed = 100;
  EXPECT_NE(a, format_csv(run_benchmark(other, kAll, one)));
}

TEST(Benchmark, QamRowsCarryBer) {
  const auto cfg = small(ScenarioId::kS3, 4, {3.0});
  const auto report = run_benchmark(cfg, kAll);
  for (const ReportRow& row : report.rows) {
    ASSERT_TRUE(row.ber.has_value());
    EXPECT_GE(*row.ber, 0.0);
    EXPECT_LE(*row.ber, 1.0);
  }
}

TEST(Benchmark, OracleNotWorseThanLeastSquares) {
  for (ScenarioId id : {ScenarioId::kS1, ScenarioId::kS2}) {
    const auto cfg = small(id, 40, {-5.0, 5.0, 20.0});
    const auto report = run_benchmark(cfg, {Method::kLs, Method::kLmmse});
    for (std::size_t k = 0; k < report.rows.size(); k += 2) {
      EXPECT_LE(report.rows[k + 1].mean_nmse_db, report.rows[k].mean_nmse_db);
    }
  }
}

TEST(Benchmark, FallbackRateCountsFlaggedTrials) {
  ScenarioConfig cfg = small(ScenarioId::kS2, 2, {0.0});
  std::vector<TrialRecord> records(2);
  for (int t = 0; t < 2; ++t) {
    records[t].sweep_db = 0.0;
    records[t].trial_index = t;
    MethodOutcome o;
    o.nmse = t == 0 ? 0.1 : 0.3;
    o.fallback_used = t == 0;
    records[t].outcomes = {o};
  }
  const auto rows = aggregate(cfg, {Method::kCopra}, records);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows[0].fallback_rate, 0.5);
  EXPECT_NEAR(rows[0].mean_nmse_db, 10.0 * std::log10(0.2), 1e-14);
}

TEST(Benchmark, ManifestEchoesConfig) {
  const auto cfg = small(ScenarioId::kS1, 2, {5.0});
  const auto report = run_benchmark(cfg, {Method::kCopra, Method::kGcv});
  const auto j = nlohmann::json::parse(format_manifest(report, "2026-01-01T00:00:00Z"));
  EXPECT_EQ(j["tool"], "copra");
  EXPECT_EQ(j["version"], std::string(kToolVersion));
  EXPECT_EQ(j["timestamp"], "2026-01-01T00:00:00Z");
  EXPECT_EQ(j["master_seed"], 99);
  EXPECT_EQ(j["scenario"]["id"], "s1");
  EXPECT_EQ(j["scenario"]["rows"], 24);
  EXPECT_EQ(j["scenario"]["trials"], 2);
  EXPECT_EQ(j["scenario"]["sweep"], nlohmann::json::array({5.0}));
  EXPECT_EQ(j["methods"], nlohmann::json::array({"copra", "gcv"}));
  EXPECT_DOUBLE_EQ(j["solver"]["rho_rel"].get<double>(), 1e-9);
}

TEST(Benchmark, WriteReportCreatesBothFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "copra_bench_test";
  std::filesystem::create_directories(dir);
  const auto csv = dir / "out.csv";
  const auto report = run_benchmark(small(ScenarioId::kS2, 1, {0.0}), {Method::kLs});
  write_report(report, csv);
  EXPECT_EQ(manifest_path_for(csv), dir / "out.manifest.json");
  std::ifstream in(csv);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), format_csv(report));
  EXPECT_TRUE(std::filesystem::exists(dir / "out.manifest.json"));
  std::filesystem::remove_all(dir);
  EXPECT_THROW(write_report(report, dir / "missing" / "x.csv"), IoError);
}

TEST(Benchmark, RejectsEmptyMethodList) {
  EXPECT_THROW(run_benchmark(small(ScenarioId::kS2, 1, {0.0}), {}), ConfigError);
}

}  // namespace
}  // namespace copra
