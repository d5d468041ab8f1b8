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
#include "copra/kernels.hpp"
#include "copra/spectral.hpp"

namespace copra {
namespace {

void require_positive(double g) {
  if (!(g > 0.0) || !std::isfinite(g)) {
    std::ostringstream msg;
    msg << "regularizer must be finite and > 0, got " << g;
    throw DomainError(msg.str());
  }
}

// The two traces and their g-derivatives. The null-space energy enters the
// plain trace as sigma = 0 modes.
struct Traces {
  double weighted;
  double plain;
  double weighted_slope;
  double plain_slope;
};

Traces traces(double g, const SpectralData& data) {
  const double n = static_cast<double>(data.cols());
  const double c = n * g;
  const kernels::ShiftedMoments m =
      kernels::shifted_moments(data.sigma_sq(), data.b_sq(), c);
  Traces t{m.weighted_sq, m.plain_sq, -2.0 * n * m.weighted_cube,
           -2.0 * n * m.plain_cube};
  const double d = data.discarded_energy();
  if (d > 0.0) {
    const double inv = 1.0 / c;
    t.plain += d * inv * inv;
    t.plain_slope -= 2.0 * n * d * inv * inv * inv;
  }
  return t;
}

}  // namespace

SquareBrackets square_brackets(double g, Index cols) {
  const double n = static_cast<double>(cols);
  const double r = std::sqrt(g) * std::sqrt(g + 4.0);
  // Both brackets reduce to ratios of positive terms once r^2 = g^2 + 4g is
  // used, so neither cancels at large g.
  const double p = r + g + 2.0;
  return SquareBrackets{
      -4.0 * r / (r + g),
      4.0 * n * r / p,
      4.0 / (p * r),
      16.0 * n / (r * p * p),
  };
}

Components component_eval(double g, const SpectralData& data) {
  require_positive(g);
  const Traces t = traces(g, data);
  const SquareBrackets br = square_brackets(g, data.cols());
  return Components{t.weighted * br.first, t.plain * br.second};
}

double copra_eval(double g, const SpectralData& data) {
  const Components c = component_eval(g, data);
  return c.first + c.second;
}

ValueAndSlope copra_eval_with_derivative(double g, const SpectralData& data) {
  require_positive(g);
  const Traces t = traces(g, data);
  const SquareBrackets br = square_brackets(g, data.cols());
  return ValueAndSlope{
      t.weighted * br.first + t.plain * br.second,
      t.weighted_slope * br.first + t.weighted * br.first_slope +
          t.plain_slope * br.second + t.plain * br.second_slope,
  };
}

double copra_derivative(double g, const SpectralData& data) {
  return copra_eval_with_derivative(g, data).slope;
}

double copra_zero_limit(const SpectralData& data) {
  double c1 = 0.0;
  for (std::size_t i = 0; i < data.size(); ++i) {
    c1 += data.b_sq()[i] / data.sigma_sq()[i];
  }
  return -4.0 * c1;
}

DeltaPair delta_square_case(double g) {
  require_positive(g);
  const double r = std::sqrt(g) * std::sqrt(g + 4.0);
  const double d = 2.0 * g / (r + g);
  return DeltaPair{d, d};
}

double copra_general_eval(double g, const DeltaPair& deltas,
                          const SpectralData& data) {
  require_positive(g);
  const double d = deltas.delta;
  const double dt = deltas.delta_tilde;
  if (!(d >= 0.0) || !(dt >= 0.0) || !std::isfinite(d) || !std::isfinite(dt)) {
    throw DomainError("deltas must be finite and nonnegative");
  }
  const double n = static_cast<double>(data.cols());
  const double m = static_cast<double>(data.rows());
  const double dd = d * dt;

  const double first = dd * dd - g * g * d - g * dd;
  const double second = n * dd * (g * g - g * dd - dd * dt) +
                        m * dt * g * (g - g * d + d * dd);

  const Traces t = traces(g, data);
  return t.weighted * first + t.plain * second;
}

}  // namespace copra
