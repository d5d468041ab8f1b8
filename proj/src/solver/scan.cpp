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

#include <algorithm>
#include <cmath>
#include <sstream>

#include "copra/error.hpp"
#include "copra/root_solver.hpp"

namespace copra {

void SolverConfig::validate() const {
  if (!(rho_rel > 0.0)) throw ConfigError("rho_rel must be > 0");
  if (!(step_tol > 0.0)) throw ConfigError("step_tol must be > 0");
  if (max_iter < 1) throw ConfigError("max_iter must be >= 1");
  if (!(grid_lo_factor > 0.0)) throw ConfigError("grid_lo_factor must be > 0");
  if (!(grid_hi > 0.0) || !std::isfinite(grid_hi)) {
    throw ConfigError("grid_hi must be finite and > 0");
  }
  if (grid_points_per_decade < 1) {
    throw ConfigError("grid_points_per_decade must be >= 1");
  }
  if (!(min_start > 0.0)) throw ConfigError("min_start must be > 0");
}

std::optional<Interval> RootScan::operative_bracket() const {
  for (std::size_t k = 0; k < sign_changes.size(); ++k) {
    const std::size_t i = sign_change_index[k];
    if (i >= argmax_index && values[i] > 0.0 && values[i + 1] < 0.0) {
      return sign_changes[k];
    }
  }
  return std::nullopt;
}

std::vector<double> log_grid(double lo, double hi, int points_per_decade) {
  if (!(lo > 0.0) || !(hi > lo) || !std::isfinite(hi) || points_per_decade < 1) {
    std::ostringstream msg;
    msg << "invalid log grid [" << lo << ", " << hi << "] with "
        << points_per_decade << " points per decade";
    throw ConfigError(msg.str());
  }
  const double decades = std::log10(hi / lo);
  const auto n = static_cast<std::size_t>(
      std::max(2.0, std::ceil(decades * points_per_decade) + 1.0));
  const double log_lo = std::log(lo);
  const double span = std::log(hi) - log_lo;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) {
    grid[k] = std::exp(log_lo + span * static_cast<double>(k) / static_cast<double>(n - 1));
  }
  grid.front() = lo;
  grid.back() = hi;
  return grid;
}

RootScan scan_window(const SpectralData& data, double lo, double hi,
                     int points_per_decade) {
  RootScan scan;
  scan.grid = log_grid(lo, hi, points_per_decade);
  scan.values.reserve(scan.grid.size());
  for (double g : scan.grid) scan.values.push_back(copra_eval(g, data));

  for (std::size_t k = 0; k + 1 < scan.values.size(); ++k) {
    if (scan.values[k] * scan.values[k + 1] < 0.0) {
      scan.sign_changes.push_back({scan.grid[k], scan.grid[k + 1]});
      scan.sign_change_index.push_back(k);
    }
  }
  const auto it = std::max_element(scan.values.begin(), scan.values.end());
  scan.argmax_index = static_cast<std::size_t>(it - scan.values.begin());
  scan.argmax_gamma = scan.grid[scan.argmax_index];
  scan.root_count_estimate = static_cast<int>(scan.sign_changes.size());
  return scan;
}

double scan_lower_bound(const SpectralData& data, const SolverConfig& cfg) {
  if (!(data.retained_energy() > 0.0) || data.has_null_space_energy()) {
    return cfg.min_start;
  }
  const EpsilonEstimate eps = estimate_epsilon(data);
  return std::max(cfg.grid_lo_factor * eps.epsilon_numeric, cfg.min_start);
}

RootScan scan_roots(const SpectralData& data, const SolverConfig& cfg) {
  cfg.validate();
  const double lo = scan_lower_bound(data, cfg);
  if (!(cfg.grid_hi > lo)) {
    std::ostringstream msg;
    msg << "grid_hi " << cfg.grid_hi << " must exceed the scan start " << lo;
    throw ConfigError(msg.str());
  }
  return scan_window(data, lo, cfg.grid_hi, cfg.grid_points_per_decade);
}

}  // namespace copra
