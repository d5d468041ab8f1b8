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

// copra select  --matrix H.csv --obs y.csv [--complex paired|suffix]
//               [--rho 1e-9] [--out result.json]
// copra bench   --scenario s1|s2|s3 [--trials T] [--seed S]
//               [--methods copra,ls,lmmse,gcv,quasiopt] [--sweep lo:step:hi]
//               [--threads K] --out results.csv
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "copra/benchmark.hpp"
#include "copra/error.hpp"
#include "copra/estimators.hpp"
#include "copra/matrix_io.hpp"
#include "json.hpp"

namespace {

using copra::Complex;

nlohmann::ordered_json selection_json(const copra::SelectionResult& sel) {
  nlohmann::ordered_json j;
  j["gamma_tilde"] = sel.gamma_tilde;
  j["gamma"] = sel.gamma;
  j["iterations"] = sel.iterations;
  j["converged"] = sel.converged;
  j["fallback_used"] = sel.fallback_used;
  j["stop_reason"] = copra::to_string(sel.stop_reason);
  j["residual"] = sel.residual;
  j["rho"] = sel.rho;
  if (sel.bracket) {
    j["bracket"] = {sel.bracket->lo, sel.bracket->hi};
  } else {
    j["bracket"] = nullptr;
  }
  const copra::EpsilonEstimate& e = sel.epsilon;
  auto finite_or_null = [](double v) -> nlohmann::ordered_json {
    if (std::isfinite(v)) return v;
    return nullptr;
  };
  j["epsilon"] = {
      {"c1", e.c1},
      {"c2", e.c2},
      {"q", e.q},
      {"z", e.z},
      {"epsilon_numeric", e.epsilon_numeric},
      {"epsilon_closed", finite_or_null(e.epsilon_closed)},
      {"discrepancy", finite_or_null(e.discrepancy)},
      {"closed_form_positive", e.closed_form_positive},
  };
  return j;
}

template <typename Scalar>
nlohmann::ordered_json run_select(const copra::MatrixT<Scalar>& h,
                                  const copra::VectorT<Scalar>& y,
                                  const copra::SolverConfig& cfg) {
  const auto model = copra::decompose(h, y);
  const auto outcome = copra::copra_estimate(model, y, cfg);

  nlohmann::ordered_json j;
  j["rows"] = h.rows();
  j["cols"] = h.cols();
  j["rank"] = model.decomposition.rank;
  j["discarded_energy"] = model.data.discarded_energy();
  const nlohmann::ordered_json sel = selection_json(outcome.selection);
  for (const auto& [key, value] : sel.items()) j[key] = value;

  std::vector<double> re;
  std::vector<double> im;
  for (copra::Index i = 0; i < outcome.estimate.x_hat.size(); ++i) {
    re.push_back(std::real(outcome.estimate.x_hat(i)));
    im.push_back(std::imag(outcome.estimate.x_hat(i)));
  }
  j["x_hat"] = {{"re", re}, {"im", im}};
  return j;
}

int cmd_select(const std::string& matrix_path, const std::string& obs_path,
               const std::optional<std::string>& complex_format, double rho,
               const std::optional<std::string>& out_path) {
  const auto format = complex_format
                          ? copra::io::parse_complex_format(*complex_format)
                          : copra::io::ComplexFormat::kReal;
  const auto h = copra::io::read_matrix_csv(matrix_path, format);
  const auto y = copra::io::as_vector(copra::io::read_matrix_csv(obs_path, format));

  copra::SolverConfig cfg;
  cfg.rho_rel = rho;

  nlohmann::ordered_json result =
      h.is_complex ? run_select<Complex>(h.values, y, cfg)
                   : run_select<double>(h.real(), copra::VectorT<double>(y.real()), cfg);

  std::printf("gamma_tilde = %.12g\ngamma       = %.12g\n",
              result["gamma_tilde"].get<double>(), result["gamma"].get<double>());
  std::printf("iterations  = %d  converged = %s  fallback = %s  stop = %s\n",
              result["iterations"].get<int>(),
              result["converged"].get<bool>() ? "yes" : "no",
              result["fallback_used"].get<bool>() ? "yes" : "no",
              result["stop_reason"].get<std::string>().c_str());

  if (out_path) {
    std::ofstream out(*out_path, std::ios::trunc);
    if (!out) throw copra::IoError("cannot open " + *out_path + " for writing");
    out << result.dump(2) << "\n";
    if (!out) throw copra::IoError("failed writing " + *out_path);
  }
  return 0;
}

int cmd_bench(const std::string& scenario, std::optional<int> trials,
              std::uint64_t seed, const std::string& methods,
              const std::optional<std::string>& sweep, unsigned threads,
              const std::string& out_path) {
  copra::ScenarioConfig cfg =
      copra::ScenarioConfig::preset(copra::parse_scenario(scenario));
  if (trials) cfg.trials = *trials;
  cfg.master_seed = seed;
  if (sweep) cfg.sweep = copra::parse_sweep(*sweep);
  cfg.validate();

  copra::BenchmarkOptions options;
  options.threads = threads;
  const auto report = copra::run_benchmark(cfg, copra::parse_methods(methods), options);
  copra::write_report(report, out_path);

  std::printf("%-8s %-9s %14s %12s %9s\n", "sweep", "method", "nmse_db", "ber", "fallback");
  for (const auto& row : report.rows) {
    std::printf("%-8g %-9s %14.4f %12s %9.3f\n", row.sweep_db,
                copra::to_string(row.method), row.mean_nmse_db,
                row.ber ? std::to_string(*row.ber).c_str() : "-", row.fallback_rate);
  }
  std::printf("wrote %s and %s\n", out_path.c_str(),
              copra::manifest_path_for(out_path).string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"COPRA regularization-parameter selection toolkit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(copra::kToolVersion));

  std::string matrix_path;
  std::string obs_path;
  std::optional<std::string> complex_format;
  double rho = 1e-9;
  std::optional<std::string> select_out;
  CLI::App* select = app.add_subcommand("select", "select the regularizer for one model");
  select->add_option("--matrix", matrix_path, "model matrix CSV")->required();
  select->add_option("--obs", obs_path, "observation vector CSV")->required();
  select->add_option("--complex", complex_format, "complex encoding: paired or suffix")
      ->check(CLI::IsMember({"paired", "suffix"}));
  select->add_option("--rho", rho, "relative residual stopping factor")
      ->check(CLI::PositiveNumber);
  select->add_option("--out", select_out, "write the result as JSON");

  std::string scenario;
  std::optional<int> trials;
  std::uint64_t seed = 1;
  std::string methods = "copra,ls,lmmse,gcv,quasiopt";
  std::optional<std::string> sweep;
  unsigned threads = 0;
  std::string bench_out;
  CLI::App* bench = app.add_subcommand("bench", "run a Monte-Carlo benchmark scenario");
  bench->add_option("--scenario", scenario, "s1, s2 or s3")->required();
  bench->add_option("--trials", trials, "trials per sweep point")->check(CLI::PositiveNumber);
  bench->add_option("--seed", seed, "master seed");
  bench->add_option("--methods", methods, "comma-separated methods");
  bench->add_option("--sweep", sweep, "sweep as lo:step:hi in dB");
  bench->add_option("--threads", threads, "worker threads (0: all cores)");
  bench->add_option("--out", bench_out, "results CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (select->parsed()) {
      return cmd_select(matrix_path, obs_path, complex_format, rho, select_out);
    }
    return cmd_bench(scenario, trials, seed, methods, sweep, threads, bench_out);
  } catch (const copra::Error& e) {
    std::fprintf(stderr, "copra: %s: %s\n", copra::to_string(e.kind()), e.what());
    return copra::exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "copra: %s\n", e.what());
    return 2;
  }
}
