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

#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "copra/benchmark.hpp"
#include "copra/error.hpp"
#include "copra/qam8.hpp"

namespace copra {
namespace {

template <typename Scalar>
std::optional<double> symbol_ber(const ModelInstance<Scalar>& inst,
                                 const VectorT<Scalar>& x_hat) {
  if (inst.bits.empty()) return std::nullopt;
  if constexpr (std::is_same_v<Scalar, Complex>) {
    const std::vector<Complex> symbols(x_hat.data(), x_hat.data() + x_hat.size());
    return bit_error_rate(inst.bits, qam8_demod(symbols));
  } else {
    return std::nullopt;
  }
}

}  // namespace

template <typename Scalar>
std::vector<MethodOutcome> evaluate_trial(const ModelInstance<Scalar>& inst,
                                          const std::vector<Method>& methods,
                                          const SolverConfig& solver) {
  std::vector<MethodOutcome> outcomes(methods.size());
  const VectorT<Scalar> zero = VectorT<Scalar>::Zero(inst.x_true.size());

  std::optional<DecomposedModel<Scalar>> model;
  try {
    model.emplace(decompose(inst.h, inst.y));
  } catch (const Error&) {
    for (MethodOutcome& o : outcomes) {
      o.failed = true;
      o.converged = false;
      o.nmse = nmse(inst.x_true, zero);
      o.ber = symbol_ber(inst, zero);
    }
    return outcomes;
  }
  const Decomposition<Scalar>& dec = model->decomposition;
  const double sigma_max_sq = dec.singular_values(0) * dec.singular_values(0);

  for (std::size_t k = 0; k < methods.size(); ++k) {
    MethodOutcome& out = outcomes[k];
    VectorT<Scalar> x_hat;
    try {
      switch (methods[k]) {
        case Method::kCopra:
          try {
            CopraOutcome<Scalar> c = copra_estimate(*model, inst.y, solver);
            x_hat = std::move(c.estimate.x_hat);
            out.gamma_used = c.selection.gamma;
            out.converged = c.selection.converged;
            out.fallback_used = c.selection.fallback_used;
          } catch (const NonConvergenceError& e) {
            out.gamma_used = static_cast<double>(dec.cols()) * e.last_iterate();
            x_hat = rls_solve(dec, inst.y, out.gamma_used, Method::kCopra).x_hat;
            out.converged = false;
            out.failed = true;
          }
          break;
        case Method::kLs:
          x_hat = ls_estimate(dec, inst.y).x_hat;
          break;
        case Method::kLmmse:
          x_hat = lmmse_estimate(dec, inst.y, inst.sigma_z_sq).x_hat;
          out.gamma_used = inst.sigma_z_sq;
          break;
        case Method::kGcv: {
          const auto grid = default_selector_grid(sigma_max_sq);
          out.gamma_used = gcv_select(model->data, grid);
          x_hat = rls_solve(dec, inst.y, out.gamma_used, Method::kGcv).x_hat;
          break;
        }
        case Method::kQuasiOpt: {
          const auto grid = default_selector_grid(sigma_max_sq);
          out.gamma_used = quasiopt_select(model->data, grid);
          x_hat = rls_solve(dec, inst.y, out.gamma_used, Method::kQuasiOpt).x_hat;
          break;
        }
      }
    } catch (const Error&) {
      x_hat = zero;
      out.failed = true;
      out.converged = false;
    }
    out.nmse = nmse(inst.x_true, x_hat);
    out.ber = symbol_ber(inst, x_hat);
  }
  return outcomes;
}

template std::vector<MethodOutcome> evaluate_trial<double>(
    const ModelInstance<double>&, const std::vector<Method>&, const SolverConfig&);
template std::vector<MethodOutcome> evaluate_trial<Complex>(
    const ModelInstance<Complex>&, const std::vector<Method>&, const SolverConfig&);

std::vector<ReportRow> aggregate(const ScenarioConfig& cfg,
                                 const std::vector<Method>& methods,
                                 const std::vector<TrialRecord>& records) {
  std::vector<ReportRow> rows;
  rows.reserve(cfg.sweep.size() * methods.size());
  for (double point : cfg.sweep) {
    for (std::size_t m = 0; m < methods.size(); ++m) {
      double nmse_sum = 0.0;
      double ber_sum = 0.0;
      bool has_ber = false;
      int count = 0;
      int flagged = 0;
      for (const TrialRecord& rec : records) {
        if (rec.sweep_db != point) continue;
        const MethodOutcome& o = rec.outcomes.at(m);
        nmse_sum += o.nmse;
        if (o.ber) {
          ber_sum += *o.ber;
          has_ber = true;
        }
        flagged += (o.fallback_used || o.failed) ? 1 : 0;
        ++count;
      }
      ReportRow row;
      row.scenario = cfg.id;
      row.sweep_db = point;
      row.method = methods[m];
      row.trials = count;
      if (count > 0) {
        row.mean_nmse_db = 10.0 * std::log10(nmse_sum / count);
        if (has_ber) row.ber = ber_sum / count;
        row.fallback_rate = static_cast<double>(flagged) / count;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

BenchmarkReport run_benchmark(const ScenarioConfig& cfg,
                              const std::vector<Method>& methods,
                              const BenchmarkOptions& options) {
  cfg.validate();
  options.solver.validate();
  if (methods.empty()) throw ConfigError("no methods requested");

  const std::size_t per_point = static_cast<std::size_t>(cfg.trials);
  const std::size_t total = cfg.sweep.size() * per_point;
  std::vector<TrialRecord> records(total);

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    while (true) {
      const std::size_t task = next.fetch_add(1);
      if (task >= total) return;
      try {
        TrialRecord& rec = records[task];
        rec.scenario = cfg.id;
        rec.sweep_db = cfg.sweep[task / per_point];
        rec.trial_index = static_cast<int>(task % per_point);
        const AnyInstance inst = generate_instance(cfg, rec.sweep_db, rec.trial_index);
        rec.outcomes = std::visit(
            [&](const auto& m) { return evaluate_trial(m, methods, options.solver); },
            inst);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(total);
        return;
      }
    }
  };

  unsigned threads = options.threads != 0 ? options.threads
                                          : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, total));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  BenchmarkReport report;
  report.config = cfg;
  report.methods = methods;
  report.solver = options.solver;
  report.rows = aggregate(cfg, methods, records);
  report.records = std::move(records);
  return report;
}

}  // namespace copra
