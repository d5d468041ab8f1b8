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

// Regularized least-squares estimators sharing one spectral decomposition,
// plus the baseline regularizer selectors.

#ifndef COPRA_ESTIMATORS_HPP_
#define COPRA_ESTIMATORS_HPP_

#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "copra/root_solver.hpp"
#include "copra/spectral.hpp"

namespace copra {

enum class Method { kCopra, kLs, kLmmse, kGcv, kQuasiOpt };

const char* to_string(Method method);
// "copra", "ls", "lmmse", "gcv", "quasiopt"; throws InvalidInputError.
Method parse_method(std::string_view name);
std::vector<Method> parse_methods(std::string_view comma_list);

template <typename Scalar>
struct Estimate {
  VectorT<Scalar> x_hat;
  double gamma_used = 0.0;
  Method method = Method::kLs;
};

// x = V diag(sigma / (sigma^2 + gamma)) U^H y over the retained modes.
// Throws DomainError for gamma < 0, SingularError for gamma == 0 when the
// retained rank is below the column count.
template <typename Scalar>
Estimate<Scalar> rls_solve(const Decomposition<Scalar>& dec,
                           const VectorT<Scalar>& y, double gamma,
                           Method tag = Method::kLs);

// Minimum-norm least squares through the truncated spectral inverse.
template <typename Scalar>
Estimate<Scalar> ls_estimate(const Decomposition<Scalar>& dec,
                             const VectorT<Scalar>& y);

// Oracle LMMSE for a unit-variance white signal: rls_solve with
// gamma = sigma_z_sq. Throws DomainError unless sigma_z_sq > 0.
template <typename Scalar>
Estimate<Scalar> lmmse_estimate(const Decomposition<Scalar>& dec,
                                const VectorT<Scalar>& y, double sigma_z_sq);

template <typename Scalar>
struct CopraOutcome {
  Estimate<Scalar> estimate;
  SelectionResult selection;
};

// Root selection on model.data, then rls_solve with gamma = N * gamma_tilde.
template <typename Scalar>
CopraOutcome<Scalar> copra_estimate(const DecomposedModel<Scalar>& model,
                                    const VectorT<Scalar>& y,
                                    const SolverConfig& cfg = {});

template <typename Scalar>
CopraOutcome<Scalar> copra_estimate(const MatrixT<Scalar>& h,
                                    const VectorT<Scalar>& y,
                                    const SolverConfig& cfg = {});

// 200 log-spaced points on [1e-6 sigma_1^2, 1e2 sigma_1^2].
std::vector<double> default_selector_grid(double sigma_max_sq,
                                          std::size_t points = 200);

// [sum g^2 b_i/(s_i+g)^2 + D] / [M - sum s_i/(s_i+g)]^2
double gcv_objective(const SpectralData& data, double gamma);
// sum [g sigma_i b_i / (s_i + g)^2]^2, with b_i = |u_i^H y|
double quasiopt_objective(const SpectralData& data, double gamma);

// Grid argmin; values within 1e-12 relative of the minimum tie and resolve
// to the smallest gamma. Throws InvalidInputError on an empty grid or a
// non-positive grid point.
double gcv_select(const SpectralData& data, std::span<const double> grid);
double quasiopt_select(const SpectralData& data, std::span<const double> grid);

template <typename Scalar>
double gcv_select(const Decomposition<Scalar>& dec, const VectorT<Scalar>& y,
                  std::span<const double> grid) {
  return gcv_select(spectral_data(dec, y), grid);
}

template <typename Scalar>
double quasiopt_select(const Decomposition<Scalar>& dec,
                       const VectorT<Scalar>& y, std::span<const double> grid) {
  return quasiopt_select(spectral_data(dec, y), grid);
}

}  // namespace copra

#endif  // COPRA_ESTIMATORS_HPP_
