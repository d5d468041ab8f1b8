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
#include <functional>

#include "copra/root_solver.hpp"

namespace copra {
namespace {

int sign_of(double v) { return (v > 0.0) - (v < 0.0); }

SignPattern pattern(const std::vector<double>& grid,
                    const std::function<double(double)>& f) {
  SignPattern out;
  out.signs.reserve(grid.size());
  for (double g : grid) {
    const double h = 1e-4 * g;
    const double f0 = f(g);
    const double fp = f(g + h);
    const double fm = f(g - h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    const std::array<int, 3> s{sign_of(f0), sign_of(d1), sign_of(d2)};
    // (-1)^n F^(n) >= 0
    if (s[0] < 0 || s[1] > 0 || s[2] < 0) out.alternating = false;
    out.signs.push_back(s);
  }
  return out;
}

}  // namespace

MonotonicityReport monotonicity_diagnostic(const SpectralData& data,
                                           const std::vector<double>& grid) {
  MonotonicityReport report;
  report.grid = grid;
  report.first = pattern(grid, [&](double g) { return component_eval(g, data).first; });
  report.neg_first = pattern(grid, [&](double g) { return -component_eval(g, data).first; });
  report.second = pattern(grid, [&](double g) { return component_eval(g, data).second; });
  report.neg_second = pattern(grid, [&](double g) { return -component_eval(g, data).second; });
  return report;
}

}  // namespace copra
