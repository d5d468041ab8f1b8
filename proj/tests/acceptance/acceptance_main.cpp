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

// Acceptance suite: prints one PASS/FAIL line per criterion, followed by
// indented detail lines, and exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "copra/benchmark.hpp"
#include "copra/error.hpp"
#include "copra/root_solver.hpp"
#include "copra/spectral.hpp"
#include "support/random_models.hpp"

namespace {

using namespace copra;

struct Verdict {
  bool pass = false;
  std::string summary;
  std::vector<std::string> details;
};

std::string fmt(const char* f, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), f, a);
  return buf;
}

template <typename... Args>
std::string fmtn(const char* f, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), f, args...);
  return buf;
}

double rel(double got, double want) {
  return std::abs(got - want) / std::max(std::abs(want), 1e-300);
}

// Full-rank square instance whose conditioning does not degrade with size.
SpectralData conditioned_square(Index n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  MatrixT<double> h = testing::gaussian_matrix(n, n, rng);
  h += 3.0 * std::sqrt(static_cast<double>(n)) * MatrixT<double>::Identity(n, n);
  const VectorT<double> y = testing::gaussian_vector(n, rng);
  return decompose(h, y).data;
}

SpectralData gaussian_square(Index n, double snr_db, std::uint64_t seed) {
  const auto m = testing::square_gaussian_model(n, snr_db, seed);
  return decompose(m.h, m.y).data;
}

Index size_for(std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0xabcdefULL);
  return std::uniform_int_distribution<Index>(10, 100)(rng);
}

// ---------------------------------------------------------------- 1

Verdict limit_identity() {
  Verdict v;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SpectralData d = conditioned_square(size_for(seed), 100 + seed);
    const double limit = copra_zero_limit(d);
    worst = std::max(worst, rel(copra_eval(1e-10, d), limit));
  }
  v.pass = worst <= 1e-4;
  v.summary = fmt("worst |S(1e-10) + 4 sum b/s| / (4 sum b/s) = %.3g over 50 instances (<= 1e-4)", worst);

  double raw = 0.0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const SpectralData d = gaussian_square(size_for(seed), 10.0, 100 + seed);
    raw = std::max(raw, rel(copra_eval(1e-10, d), copra_zero_limit(d)));
  }
  v.details.push_back("instances: H = G + 3 sqrt(n) I, n in [10, 100]");
  v.details.push_back(fmt("info: same statistic on unshifted Gaussian H is %.3g", raw));
  return v;
}

// ---------------------------------------------------------------- 2

Verdict derivative_check() {
  Verdict v;
  std::vector<double> grid(20);
  for (int k = 0; k < 20; ++k) grid[k] = std::pow(10.0, -3.0 + 6.0 * k / 19.0);
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpectralData d = gaussian_square(size_for(seed + 500), 10.0, 200 + seed);
    for (double g : grid) {
      const double h = 1e-6 * g;
      const double fd = (copra_eval(g + h, d) - copra_eval(g - h, d)) / (2.0 * h);
      const ValueAndSlope an = copra_eval_with_derivative(g, d);
      const double scale = std::max(std::abs(an.slope), std::abs(an.value) / g);
      worst = std::max(worst, std::abs(an.slope - fd) / scale);
    }
  }
  v.pass = worst <= 1e-6 && grid.size() == 20;
  v.summary = fmt("worst relative derivative error %.3g on 20 points x 20 instances (<= 1e-6)", worst);
  v.details.push_back("denominator max(|S'|, |S|/g); central difference h = 1e-6 g");
  return v;
}

// ---------------------------------------------------------------- 3

Verdict general_form_consistency() {
  Verdict v;
  double worst = 0.0;
  double worst_scaled = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const SpectralData d = testing::random_spectrum(20, 300 + seed);
    for (double g : {0.05, 0.7, 5.0}) {
      const DeltaPair p = delta_square_case(g);
      const double general = copra_general_eval(g, p, d);
      const double square = copra_eval(g, d);
      worst = std::max(worst, rel(general, square));
      worst_scaled = std::max(worst_scaled, rel(general, 0.5 * g * g * p.delta * square));
    }
  }
  v.pass = worst <= 1e-10;
  v.summary = fmt("worst |general - square| / |square| = %.3g at g in {0.05, 0.7, 5} (<= 1e-10)", worst);
  v.details.push_back(
      fmt("diagnostic: general / square = g^2 delta / 2 holds to %.3g (same zero set, different scale)",
          worst_scaled));
  return v;
}

// ---------------------------------------------------------------- 4

Verdict epsilon_oracle() {
  Verdict v;
  double worst_residual = 0.0;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const EpsilonEstimate e = estimate_epsilon(testing::random_spectrum(5 + seed % 60, 400 + seed));
    worst_residual = std::max(worst_residual, e.cubic_residual);
  }
  const EpsilonEstimate one = estimate_epsilon(SpectralData({1.0}, {1.0}, 1, 1));
  const EpsilonEstimate two = estimate_epsilon(SpectralData({1.0}, {1.0}, 2, 2));
  const bool case_one = std::abs(one.epsilon_numeric - 2.383) < 1e-3 && one.discrepancy < 1e-3;
  const bool case_two = two.epsilon_numeric == 1.0 && std::abs(two.epsilon_closed - 0.5) < 1e-12;
  v.pass = worst_residual <= 1e-9 && one.cubic_residual <= 1e-9 && case_one && case_two;
  v.summary = fmtn("cubic residual %.3g (<= 1e-9); N=1: eps %.5f closed %.5f; N=2: eps %.17g closed %.5g",
                   worst_residual, one.epsilon_numeric, one.epsilon_closed,
                   two.epsilon_numeric, two.epsilon_closed);
  v.details.push_back(fmtn("N=1 discrepancy %.3g (< 1e-3); N=2 discrepancy %.3g recorded", one.discrepancy,
                           two.discrepancy));
  return v;
}

// ---------------------------------------------------------------- 5

Verdict root_structure() {
  Verdict v;
  int max_changes = 0;
  int single_bracket = 0;
  int agreeing = 0;
  int max_iterations = 0;
  double worst = 0.0;
  const SolverConfig cfg;
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const SpectralData d = gaussian_square(50, 10.0, 500 + seed);
    const RootScan scan = scan_roots(d, cfg);
    max_changes = std::max(max_changes, scan.root_count_estimate);
    int beyond = 0;
    for (std::size_t idx : scan.sign_change_index) beyond += idx >= scan.argmax_index;
    if (beyond != 1 || !scan.operative_bracket()) continue;
    ++single_bracket;
    try {
      const SelectionResult r = newton_solve(d, cfg);
      const double oracle = bisect_root(d, *scan.operative_bracket(), 1e-12);
      const double err = rel(r.gamma_tilde, oracle);
      worst = std::max(worst, err);
      max_iterations = std::max(max_iterations, r.iterations);
      if (r.converged && r.iterations <= 100 && err <= 1e-6) ++agreeing;
    } catch (const Error&) {
    }
  }
  const double share = single_bracket > 0 ? static_cast<double>(agreeing) / single_bracket : 0.0;
  v.pass = max_changes <= 2 && single_bracket > 0 && share >= 0.99;
  v.summary = fmtn("max sign changes %d (<= 2); %d/%d single-bracket cases agree with bisection (>= 99%%)",
                   max_changes, agreeing, single_bracket);
  v.details.push_back(fmtn("worst relative gap %.3g, max iterations %d", worst, max_iterations));
  return v;
}

// ---------------------------------------------------------------- 6

Verdict scale_invariance() {
  Verdict v;
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto m = testing::square_gaussian_model(size_for(seed + 900), 10.0, 600 + seed);
    const double base = newton_solve(decompose(m.h, m.y).data).gamma_tilde;
    for (double alpha : {1e-3, 1e3}) {
      const VectorT<double> y = alpha * m.y;
      worst = std::max(worst, rel(newton_solve(decompose(m.h, y).data).gamma_tilde, base));
    }
  }
  v.pass = worst <= 1e-8;
  v.summary = fmt("worst relative change of selected g under y -> a y, a in {1e-3, 1e3}: %.3g (<= 1e-8)", worst);
  return v;
}

// ---------------------------------------------------------------- 7-10

const ReportRow& row_of(const BenchmarkReport& r, double db, Method m) {
  for (const ReportRow& row : r.rows) {
    if (row.sweep_db == db && row.method == m) return row;
  }
  throw std::runtime_error("missing report row");
}

Verdict scenario_s1() {
  Verdict v;
  ScenarioConfig cfg = ScenarioConfig::preset(ScenarioId::kS1);
  cfg.sweep = {0, 5, 10, 15, 20, 25};
  cfg.trials = 1000;
  const auto report = run_benchmark(cfg, {Method::kCopra, Method::kLs, Method::kLmmse});
  bool ok = true;
  for (double db : cfg.sweep) {
    const double c = row_of(report, db, Method::kCopra).mean_nmse_db;
    const double l = row_of(report, db, Method::kLmmse).mean_nmse_db;
    const double ls = row_of(report, db, Method::kLs).mean_nmse_db;
    const bool near = db < 10 || c - l <= 2.0;
    const bool better = c <= ls;
    ok = ok && near && better;
    v.details.push_back(fmtn("SNR %5.1f dB: copra %8.3f  lmmse %8.3f  ls %8.3f  fallback %.3f%s", db, c, l, ls,
                             row_of(report, db, Method::kCopra).fallback_rate,
                             near && better ? "" : "  <-- violates"));
  }
  v.pass = ok;
  v.summary = "copra within 2 dB of lmmse at SNR >= 10 dB and never worse than ls (1000 trials)";
  return v;
}

Verdict scenario_s2() {
  Verdict v;
  ScenarioConfig cfg = ScenarioConfig::preset(ScenarioId::kS2);
  cfg.trials = 1000;
  const auto report = run_benchmark(cfg, {Method::kCopra, Method::kLs, Method::kLmmse});
  bool ok = true;
  for (double db : cfg.sweep) {
    const double c = row_of(report, db, Method::kCopra).mean_nmse_db;
    const double ls = row_of(report, db, Method::kLs).mean_nmse_db;
    const double l = row_of(report, db, Method::kLmmse).mean_nmse_db;
    const bool checked = db <= 5.0;
    const bool good = !checked || c <= ls - 10.0;
    ok = ok && good;
    v.details.push_back(fmtn("SNR %5.1f dB: copra %8.3f  ls %8.3f  lmmse %8.3f%s%s", db, c, ls, l,
                             checked ? "  [checked]" : "", good ? "" : "  <-- violates"));
  }
  v.pass = ok;
  v.summary = "copra at least 10 dB below ls at every SNR <= 5 dB (1000 trials)";
  return v;
}

Verdict scenario_s3() {
  Verdict v;
  ScenarioConfig cfg = ScenarioConfig::preset(ScenarioId::kS3);
  cfg.sweep = {0, 3, 6, 9, 12, 15};
  cfg.trials = 200;
  const auto report = run_benchmark(cfg, {Method::kCopra, Method::kLmmse, Method::kLs});
  bool ok = true;
  for (double db : cfg.sweep) {
    const double c = *row_of(report, db, Method::kCopra).ber;
    const double l = *row_of(report, db, Method::kLmmse).ber;
    const double ls = *row_of(report, db, Method::kLs).ber;
    const bool good = c <= std::max(1.5 * l, l + 0.005);
    ok = ok && good;
    v.details.push_back(fmtn("Eb/N0 %5.1f dB: copra BER %.5f  lmmse BER %.5f  ls BER %.5f%s", db, c, l, ls,
                             good ? "" : "  <-- violates"));
  }
  v.pass = ok;
  v.summary = "copra BER within max(1.5x, +0.005) of lmmse BER over Eb/N0 0-15 dB (200 trials)";
  return v;
}

Verdict determinism() {
  Verdict v;
  std::vector<std::string> lines;
  bool ok = true;
  for (ScenarioId id : {ScenarioId::kS1, ScenarioId::kS2, ScenarioId::kS3}) {
    ScenarioConfig cfg = ScenarioConfig::preset(id);
    cfg.trials = 20;
    cfg.master_seed = 7;
    const std::vector<Method> all = {Method::kCopra, Method::kLs, Method::kLmmse, Method::kGcv,
                                     Method::kQuasiOpt};
    BenchmarkOptions serial;
    serial.threads = 1;
    BenchmarkOptions parallel;
    parallel.threads = 3;
    const std::string a = format_csv(run_benchmark(cfg, all, serial));
    const std::string b = format_csv(run_benchmark(cfg, all, parallel));
    ok = ok && a == b;
    v.details.push_back(fmtn("%s: %zu CSV bytes, %s", to_string(id), a.size(), a == b ? "identical" : "DIFFERENT"));
  }
  v.pass = ok;
  v.summary = "two runs with the same master seed give identical CSV content (all scenarios, all methods)";
  return v;
}

struct Criterion {
  int id;
  const char* name;
  double limit_s;  // 0: no runtime bound
  std::function<Verdict()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "limit identity", 5, limit_identity},
      {2, "derivative correctness", 5, derivative_check},
      {3, "general/square form consistency", 0, general_form_consistency},
      {4, "epsilon oracle", 0, epsilon_oracle},
      {5, "root structure", 60, root_structure},
      {6, "selection scale invariance", 0, scale_invariance},
      {7, "scenario s1", 600, scenario_s1},
      {8, "scenario s2", 600, scenario_s2},
      {9, "scenario s3", 600, scenario_s3},
      {10, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v.pass = false;
      v.summary = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = v.pass && in_time;
    failures += pass ? 0 : 1;
    std::printf("[%s] criterion %2d %-32s %s (%.2f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name,
                v.summary.c_str(), secs,
                c.limit_s > 0 ? fmt(", limit %.0f s", c.limit_s).c_str() : "");
    for (const std::string& d : v.details) std::printf("         %s\n", d.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
