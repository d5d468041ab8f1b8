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

#include <cmath>
#include <sstream>

#include "copra/error.hpp"
#include "copra/root_solver.hpp"

namespace copra {

const char* to_string(StopReason reason) {
  switch (reason) {
    case StopReason::kResidual:
      return "residual";
    case StopReason::kStep:
      return "step";
    case StopReason::kFallback:
      return "fallback";
  }
  return "unknown";
}

SelectionResult newton_solve(const SpectralData& data, const SolverConfig& cfg) {
  cfg.validate();
  const double n = static_cast<double>(data.cols());

  SelectionResult result;
  result.epsilon = estimate_epsilon(data);
  const RootScan scan = scan_roots(data, cfg);
  const std::optional<Interval> bracket = scan.operative_bracket();

  if (!bracket) {
    result.gamma_tilde = scan.argmax_gamma;
    result.gamma = n * result.gamma_tilde;
    result.residual = std::abs(scan.values[scan.argmax_index]);
    result.fallback_used = true;
    result.converged = false;
    result.stop_reason = StopReason::kFallback;
    return result;
  }
  result.bracket = bracket;

  double lo = bracket->lo;
  double hi = bracket->hi;
  double x = lo;
  ValueAndSlope at = copra_eval_with_derivative(x, data);
  result.rho = cfg.rho_rel * std::abs(at.value);

  auto finish = [&](StopReason reason) {
    result.gamma_tilde = x;
    result.gamma = n * x;
    result.residual = std::abs(at.value);
    result.converged = true;
    result.stop_reason = reason;
    return result;
  };

  while (true) {
    if (result.iterations >= cfg.max_iter) {
      std::ostringstream msg;
      msg << "safeguarded Newton did not converge in " << cfg.max_iter
          << " iterations (last iterate " << x << ", |S| = "
          << std::abs(at.value) << ")";
      throw NonConvergenceError(msg.str(), x, result.iterations);
    }

    double next = x - at.value / at.slope;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = next - x;

    x = next;
    at = copra_eval_with_derivative(x, data);
    ++result.iterations;
    if (at.value > 0.0) {
      lo = x;
    } else if (at.value < 0.0) {
      hi = x;
    } else {
      lo = hi = x;
    }
    result.trace.push_back({x, at.value, lo, hi});

    if (std::abs(at.value) <= result.rho) return finish(StopReason::kResidual);
    if (std::abs(step) < cfg.step_tol * (1.0 + x)) return finish(StopReason::kStep);
  }
}

double bisect_root(const SpectralData& data, Interval bracket, double rel_tol) {
  double lo = bracket.lo;
  double hi = bracket.hi;
  if (!(copra_eval(lo, data) > 0.0) || !(copra_eval(hi, data) < 0.0)) {
    throw InvalidInputError("bisection needs S(lo) > 0 > S(hi)");
  }
  while (hi - lo > rel_tol * hi) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double v = copra_eval(mid, data);
    if (v == 0.0) return mid;
    (v > 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace copra
