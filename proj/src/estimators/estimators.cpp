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
#include "copra/estimators.hpp"
#include "copra/kernels.hpp"

namespace copra {
namespace {

template <typename Objective>
double grid_argmin(std::span<const double> grid, Objective objective) {
  if (grid.empty()) throw InvalidInputError("selector grid is empty");
  std::vector<double> values(grid.size());
  double best = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0) || !std::isfinite(grid[k])) {
      throw InvalidInputError("selector grid points must be finite and > 0");
    }
    values[k] = objective(grid[k]);
    if (k == 0 || values[k] < best) best = values[k];
  }
  const double cutoff = best + 1e-12 * std::abs(best);
  double chosen = 0.0;
  bool found = false;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (values[k] <= cutoff && (!found || grid[k] < chosen)) {
      chosen = grid[k];
      found = true;
    }
  }
  return chosen;
}

}  // namespace

const char* to_string(Method method) {
  switch (method) {
    case Method::kCopra:
      return "copra";
    case Method::kLs:
      return "ls";
    case Method::kLmmse:
      return "lmmse";
    case Method::kGcv:
      return "gcv";
    case Method::kQuasiOpt:
      return "quasiopt";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::kCopra, Method::kLs, Method::kLmmse, Method::kGcv,
                   Method::kQuasiOpt}) {
    if (name == to_string(m)) return m;
  }
  throw InvalidInputError("unknown method '" + std::string(name) + "'");
}

std::vector<Method> parse_methods(std::string_view comma_list) {
  std::vector<Method> out;
  std::size_t start = 0;
  while (start <= comma_list.size()) {
    const auto comma = comma_list.find(',', start);
    const auto name = comma_list.substr(start, comma - start);
    if (!name.empty()) {
      const Method m = parse_method(name);
      if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw InvalidInputError("no methods given");
  return out;
}

template <typename Scalar>
Estimate<Scalar> rls_solve(const Decomposition<Scalar>& dec,
                           const VectorT<Scalar>& y, double gamma, Method tag) {
  if (!(gamma >= 0.0) || !std::isfinite(gamma)) {
    throw DomainError("regularizer must be finite and >= 0");
  }
  if (y.size() != dec.rows()) {
    throw InvalidInputError("observation length does not match model rows");
  }
  if (gamma == 0.0 && dec.rank < dec.cols()) {
    std::ostringstream msg;
    msg << "unregularized normal equations are singular (rank " << dec.rank
        << " < " << dec.cols() << " columns)";
    throw SingularError(msg.str());
  }
  const Index r = dec.rank;
  VectorT<Scalar> coeff = dec.left_basis.leftCols(r).adjoint() * y;
  for (Index i = 0; i < r; ++i) {
    const double s = dec.singular_values(i);
    coeff(i) *= s / (s * s + gamma);
  }
  return Estimate<Scalar>{dec.right_basis.leftCols(r) * coeff, gamma, tag};
}

template <typename Scalar>
Estimate<Scalar> ls_estimate(const Decomposition<Scalar>& dec,
                             const VectorT<Scalar>& y) {
  if (y.size() != dec.rows()) {
    throw InvalidInputError("observation length does not match model rows");
  }
  const Index r = dec.rank;
  VectorT<Scalar> coeff = dec.left_basis.leftCols(r).adjoint() * y;
  for (Index i = 0; i < r; ++i) coeff(i) /= dec.singular_values(i);
  return Estimate<Scalar>{dec.right_basis.leftCols(r) * coeff, 0.0, Method::kLs};
}

template <typename Scalar>
Estimate<Scalar> lmmse_estimate(const Decomposition<Scalar>& dec,
                                const VectorT<Scalar>& y, double sigma_z_sq) {
  if (!(sigma_z_sq > 0.0) || !std::isfinite(sigma_z_sq)) {
    throw DomainError("noise variance must be finite and > 0");
  }
  return rls_solve(dec, y, sigma_z_sq, Method::kLmmse);
}

template <typename Scalar>
CopraOutcome<Scalar> copra_estimate(const DecomposedModel<Scalar>& model,
                                    const VectorT<Scalar>& y,
                                    const SolverConfig& cfg) {
  SelectionResult sel = newton_solve(model.data, cfg);
  Estimate<Scalar> est = rls_solve(model.decomposition, y, sel.gamma, Method::kCopra);
  return CopraOutcome<Scalar>{std::move(est), std::move(sel)};
}

template <typename Scalar>
CopraOutcome<Scalar> copra_estimate(const MatrixT<Scalar>& h,
                                    const VectorT<Scalar>& y,
                                    const SolverConfig& cfg) {
  return copra_estimate(decompose(h, y), y, cfg);
}

std::vector<double> default_selector_grid(double sigma_max_sq,
                                          std::size_t points) {
  if (!(sigma_max_sq > 0.0) || points < 2) {
    throw InvalidInputError("selector grid needs sigma_max^2 > 0 and >= 2 points");
  }
  std::vector<double> grid(points);
  const double lo = std::log(1e-6 * sigma_max_sq);
  const double hi = std::log(1e2 * sigma_max_sq);
  for (std::size_t k = 0; k < points; ++k) {
    grid[k] = std::exp(lo + (hi - lo) * static_cast<double>(k) /
                                static_cast<double>(points - 1));
  }
  return grid;
}

double gcv_objective(const SpectralData& data, double gamma) {
  const kernels::FilterSums f =
      kernels::filter_sums(data.sigma_sq(), data.b_sq(), gamma);
  // M - sum s/(s+g) written without the cancellation at small g
  const double denom =
      static_cast<double>(data.rows() - static_cast<Index>(data.size())) + f.slack;
  return (f.residual + data.discarded_energy()) / (denom * denom);
}

double quasiopt_objective(const SpectralData& data, double gamma) {
  return kernels::filter_sums(data.sigma_sq(), data.b_sq(), gamma).quasi;
}

double gcv_select(const SpectralData& data, std::span<const double> grid) {
  return grid_argmin(grid, [&](double g) { return gcv_objective(data, g); });
}

double quasiopt_select(const SpectralData& data, std::span<const double> grid) {
  return grid_argmin(grid, [&](double g) { return quasiopt_objective(data, g); });
}

#define COPRA_INSTANTIATE_ESTIMATORS(Scalar)                                   \
  template Estimate<Scalar> rls_solve<Scalar>(const Decomposition<Scalar>&,    \
                                              const VectorT<Scalar>&, double,  \
                                              Method);                         \
  template Estimate<Scalar> ls_estimate<Scalar>(const Decomposition<Scalar>&,  \
                                                const VectorT<Scalar>&);       \
  template Estimate<Scalar> lmmse_estimate<Scalar>(                            \
      const Decomposition<Scalar>&, const VectorT<Scalar>&, double);           \
  template CopraOutcome<Scalar> copra_estimate<Scalar>(                        \
      const DecomposedModel<Scalar>&, const VectorT<Scalar>&,                  \
      const SolverConfig&);                                                    \
  template CopraOutcome<Scalar> copra_estimate<Scalar>(                        \
      const MatrixT<Scalar>&, const VectorT<Scalar>&, const SolverConfig&);

COPRA_INSTANTIATE_ESTIMATORS(double)
COPRA_INSTANTIATE_ESTIMATORS(Complex)

#undef COPRA_INSTANTIATE_ESTIMATORS

}  // namespace copra
