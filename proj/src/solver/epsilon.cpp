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
#include <limits>

#include "copra/error.hpp"
#include "copra/root_solver.hpp"

namespace copra {
namespace {

double cubic(double t, double k) { return ((t - 2.0) * t + 2.0) * t - k; }

}  // namespace

double epsilon_approximant(double e, double c1, double c2, Index cols) {
  const double n = static_cast<double>(cols);
  const double root = std::sqrt(e);
  return 2.0 * n * c2 * e * root + 4.0 * n * c2 * root - 4.0 * n * c2 * e -
         4.0 * c1;
}

double cubic_sqrt_epsilon_root(double k) {
  if (!(k >= 0.0) || !std::isfinite(k)) {
    throw DomainError("cubic constant must be finite and nonnegative");
  }
  // The cubic is strictly increasing (derivative 3t^2 - 4t + 2 > 0), negative
  // at 0 and positive at 1 + k.
  double lo = 0.0;
  double hi = 1.0 + k;
  for (int it = 0; it < 4096; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double p = cubic(mid, k);
    if (p == 0.0) return mid;
    (p < 0.0 ? lo : hi) = mid;
  }
  return std::abs(cubic(lo, k)) <= std::abs(cubic(hi, k)) ? lo : hi;
}

ClosedFormEpsilon closed_form_epsilon(double cols, double c1, double c2) {
  const double n = cols;
  const double gap = n * c2 - 2.0 * c1;
  ClosedFormEpsilon out{};
  out.q = 108.0 * n * c1 * c2;
  out.z = 19.05 * n * n * n * c2 * c2 * c2 * gap;
  const double disc = out.q * out.q + out.z * out.z * out.z;
  if (disc < 0.0) {
    out.epsilon = std::numeric_limits<double>::quiet_NaN();
    out.positive = false;
    return out;
  }
  const double a = std::cbrt(out.q + std::sqrt(disc));
  const double cbrt2 = std::cbrt(2.0);
  out.epsilon = a / (3.0 * cbrt2 * n * n * c2 * c2) - 4.0 * cbrt2 * n * c2 * gap / a;
  out.positive = a * a > out.z;
  return out;
}

EpsilonEstimate estimate_epsilon(const SpectralData& data) {
  EpsilonEstimate est;
  for (std::size_t i = 0; i < data.size(); ++i) {
    const double s = data.sigma_sq()[i];
    const double b = data.b_sq()[i];
    est.c1 += b / s;
    est.c2 += b / (s * s);
  }
  if (!(est.c1 > 0.0)) {
    throw DegenerateError("observation has no energy in the retained modes");
  }
  const double n = static_cast<double>(data.cols());
  const double k = 2.0 * est.c1 / (n * est.c2);
  const double t = cubic_sqrt_epsilon_root(k);
  est.epsilon_numeric = t * t;
  est.cubic_residual = std::abs(cubic(t, k));

  const ClosedFormEpsilon closed = closed_form_epsilon(n, est.c1, est.c2);
  est.q = closed.q;
  est.z = closed.z;
  est.epsilon_closed = closed.epsilon;
  est.closed_form_positive = closed.positive;
  est.discrepancy =
      std::abs(est.epsilon_closed - est.epsilon_numeric) / est.epsilon_numeric;
  return est;
}

}  // namespace copra
