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

// Locating the operative positive root of the characteristic function S.
//
// Near 0+ S starts at -4 C1 (C1 = sum b_i/s_i) and may cross zero at a tiny
// spurious root eps before rising to a maximum; past the maximum it decreases
// through the operative root and approaches 0 from below. The solver skips
// eps, scans a log grid for the first + to - crossing beyond the grid
// maximum and refines it with a bracket-safeguarded Newton iteration.

#ifndef COPRA_ROOT_SOLVER_HPP_
#define COPRA_ROOT_SOLVER_HPP_

#include <array>
#include <optional>
#include <vector>

#include "copra/spectral.hpp"

namespace copra {

struct EpsilonEstimate {
  double c1 = 0.0;  // sum b_i / s_i
  double c2 = 0.0;  // sum b_i / s_i^2
  double q = 0.0;   // 108 N c1 c2
  double z = 0.0;   // 19.05 N^3 c2^3 (N c2 - 2 c1)
  // Published closed form; NaN when q^2 + z^3 < 0 (no real radical).
  double epsilon_closed = 0.0;
  // t*^2 with t* the real root of t^3 - 2t^2 + 2t - 2 c1/(N c2) = 0.
  double epsilon_numeric = 0.0;
  // |closed - numeric| / numeric, NaN with epsilon_closed.
  double discrepancy = 0.0;
  // (q + sqrt(q^2 + z^3))^(2/3) > z; equivalent to epsilon_closed > 0.
  bool closed_form_positive = false;
  // |t*^3 - 2t*^2 + 2t* - 2 c1/(N c2)| at the bisection root.
  double cubic_residual = 0.0;
};

// Throws DegenerateError when every b_i is zero.
EpsilonEstimate estimate_epsilon(const SpectralData& data);

// Leading-order small-g expansion of S:
//   2 N c2 e^{3/2} + 4 N c2 e^{1/2} - 4 N c2 e - 4 c1.
double epsilon_approximant(double e, double c1, double c2, Index cols);

// Closed-form root for explicit (N, c1, c2); used by estimate_epsilon.
struct ClosedFormEpsilon {
  double q;
  double z;
  double epsilon;
  bool positive;
};
ClosedFormEpsilon closed_form_epsilon(double cols, double c1, double c2);

// Real root t of t^3 - 2 t^2 + 2 t - k = 0 (k >= 0) by bisection on
// [0, 1 + k].
double cubic_sqrt_epsilon_root(double k);

struct SolverConfig {
  double rho_rel = 1e-9;        // |S| stop threshold relative to |S(start)|
  double step_tol = 1e-12;      // |step| < step_tol * (1 + g) stops
  int max_iter = 100;
  double grid_lo_factor = 10.0; // scan starts at grid_lo_factor * eps
  double grid_hi = 1e6;
  int grid_points_per_decade = 20;
  double min_start = 1e-8;      // lower clamp of the scan start

  // Throws ConfigError on non-positive factors, tolerances or counts.
  void validate() const;
};

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

struct RootScan {
  std::vector<double> grid;
  std::vector<double> values;
  std::vector<Interval> sign_changes;
  std::vector<std::size_t> sign_change_index;  // lower grid index per change
  double argmax_gamma = 0.0;
  std::size_t argmax_index = 0;
  int root_count_estimate = 0;

  // First + to - crossing at or after the grid argmax.
  std::optional<Interval> operative_bracket() const;
};

// n_per_decade log-spaced points covering [lo, hi], both ends included.
std::vector<double> log_grid(double lo, double hi, int points_per_decade);

// Samples S on log_grid(lo, hi, ppd) and records sign changes and argmax.
RootScan scan_window(const SpectralData& data, double lo, double hi,
                     int points_per_decade);

// Lower end of the solver's scan: min_start when null-space energy is
// present (no spurious root exists), otherwise
// max(grid_lo_factor * eps_numeric, min_start). min_start when b == 0.
double scan_lower_bound(const SpectralData& data, const SolverConfig& cfg);

RootScan scan_roots(const SpectralData& data, const SolverConfig& cfg);

enum class StopReason { kResidual, kStep, kFallback };
const char* to_string(StopReason reason);

struct NewtonStep {
  double gamma;  // iterate at which S was evaluated
  double value;
  double lo;     // bracket after the update
  double hi;
};

struct SelectionResult {
  double gamma_tilde = 0.0;
  double gamma = 0.0;  // cols * gamma_tilde
  int iterations = 0;
  bool converged = false;
  bool fallback_used = false;
  double residual = 0.0;  // |S(gamma_tilde)|
  double rho = 0.0;
  StopReason stop_reason = StopReason::kFallback;
  std::optional<Interval> bracket;
  EpsilonEstimate epsilon;
  std::vector<NewtonStep> trace;
};

// Scan, bracket and refine. Without a bracket, returns the grid argmax with
// fallback_used = true and converged = false.
// Throws DegenerateError for b == 0, NonConvergenceError after max_iter.
SelectionResult newton_solve(const SpectralData& data,
                             const SolverConfig& cfg = {});

// Pure bisection on a bracket with S(lo) > 0 > S(hi), to relative width tol.
double bisect_root(const SpectralData& data, Interval bracket,
                   double rel_tol = 1e-12);

// Finite-difference sign patterns of S1, -S1, S2, -S2 (orders 0, 1, 2) on a
// grid; central stencils with h = 1e-4 g. Diagnostic only.
struct SignPattern {
  // signs[k][n] for grid point k and derivative order n, each in {-1, 0, 1}.
  std::vector<std::array<int, 3>> signs;
  // (-1)^n F^(n) >= 0 at every point and order.
  bool alternating = true;
};

struct MonotonicityReport {
  std::vector<double> grid;
  SignPattern first;
  SignPattern neg_first;
  SignPattern second;
  SignPattern neg_second;
};

MonotonicityReport monotonicity_diagnostic(const SpectralData& data,
                                           const std::vector<double>& grid);

}  // namespace copra

#endif  // COPRA_ROOT_SOLVER_HPP_
