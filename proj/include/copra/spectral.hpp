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

// Spectral representation of a linear model y = Hx + z and the COPRA
// characteristic function evaluated on it.
//
// All characteristic-function math works on SpectralData only: the squared
// singular values s_i = sigma_i^2 of the retained modes, the projected
// observation energies b_i = |u_i^H y|^2, the dimensions, and the energy D of
// y outside the retained left singular subspace. The null-space modes count
// as sigma = 0 entries of the second trace, which adds D / (N g)^2 to it.

#ifndef COPRA_SPECTRAL_HPP_
#define COPRA_SPECTRAL_HPP_

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace copra {

using Index = Eigen::Index;
using Complex = std::complex<double>;

template <typename Scalar>
using MatrixT = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorT = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

// Thin SVD of an M x N model with a full left basis.
template <typename Scalar>
struct Decomposition {
  MatrixT<Scalar> left_basis;        // M x M, unitary
  Eigen::VectorXd singular_values;   // min(M, N), descending
  MatrixT<Scalar> right_basis;       // N x min(M, N)
  double rank_tolerance = 0.0;
  Index rank = 0;                    // modes with sigma > rank_tolerance

  Index rows() const { return left_basis.rows(); }
  Index cols() const { return right_basis.rows(); }
};

class SpectralData {
 public:
  // Throws InvalidInputError unless: sizes match and are nonzero, every
  // sigma_sq is finite and > 0, every b_sq is finite and >= 0, rows and cols
  // are >= 1 and discarded_energy is finite and >= 0.
  SpectralData(std::vector<double> sigma_sq, std::vector<double> b_sq,
               Index rows, Index cols, double discarded_energy = 0.0);

  std::span<const double> sigma_sq() const { return sigma_sq_; }
  std::span<const double> b_sq() const { return b_sq_; }
  Index rows() const { return rows_; }
  Index cols() const { return cols_; }
  std::size_t size() const { return sigma_sq_.size(); }
  double discarded_energy() const { return discarded_energy_; }

  // Sum of b_sq plus the discarded energy, i.e. ||y||^2.
  double total_energy() const;
  double retained_energy() const;

  // True when the null-space energy is above rounding level
  // (D > 1e-12 ||y||^2). The characteristic function then diverges to +inf
  // at 0+ and has no small spurious root.
  bool has_null_space_energy() const;

  // Same spectrum with every energy multiplied by alpha >= 0 (y -> sqrt(alpha) y).
  SpectralData with_scaled_energy(double alpha) const;

 private:
  std::vector<double> sigma_sq_;
  std::vector<double> b_sq_;
  Index rows_;
  Index cols_;
  double discarded_energy_;
};

template <typename Scalar>
struct DecomposedModel {
  Decomposition<Scalar> decomposition;
  SpectralData data;
};

// SVD of h and the spectral energies of y. A negative or absent tolerance
// selects machine-epsilon * max(M, N) * sigma_1.
// Throws InvalidInputError on empty or mismatched shapes or non-finite
// entries, DegenerateError when no singular value exceeds the tolerance.
template <typename Scalar>
DecomposedModel<Scalar> decompose(const MatrixT<Scalar>& h,
                                  const VectorT<Scalar>& y,
                                  std::optional<double> rank_tolerance = {});

// Spectral energies of a (new) observation against an existing
// decomposition.
template <typename Scalar>
SpectralData spectral_data(const Decomposition<Scalar>& dec,
                           const VectorT<Scalar>& y);

// ---------------------------------------------------------------------------
// Characteristic function, square-ratio form
// ---------------------------------------------------------------------------

struct Components {
  double first = 0.0;   // sigma-weighted trace times its bracket; always <= 0
  double second = 0.0;  // plain trace times its bracket
};

struct ValueAndSlope {
  double value = 0.0;
  double slope = 0.0;
};

// S(g) for g > 0. Throws DomainError for g <= 0 or non-finite g.
double copra_eval(double g, const SpectralData& data);

Components component_eval(double g, const SpectralData& data);

// Analytic dS/dg.
double copra_derivative(double g, const SpectralData& data);

// S and dS/dg from one pass over the modes.
ValueAndSlope copra_eval_with_derivative(double g, const SpectralData& data);

// -4 sum b_i / s_i: the limit of S at 0+ when there is no null-space energy.
double copra_zero_limit(const SpectralData& data);

// The two bracket factors of the square-ratio form and their derivatives.
struct SquareBrackets {
  double first;
  double second;
  double first_slope;
  double second_slope;
};
SquareBrackets square_brackets(double g, Index cols);

// ---------------------------------------------------------------------------
// General-ratio form
// ---------------------------------------------------------------------------

struct DeltaPair {
  double delta = 0.0;
  double delta_tilde = 0.0;
};

// delta = delta_tilde = (g/2)(sqrt((g+4)/g) - 1), the positive root of
// d^2 + g d - g = 0. Evaluated as 2g / (sqrt(g) sqrt(g+4) + g).
DeltaPair delta_square_case(double g);

// The general M/N characteristic function with caller-supplied deltas.
// With M = N and square-case deltas this equals (g^2 delta / 2) * copra_eval:
// same zero set, different scale.
double copra_general_eval(double g, const DeltaPair& deltas,
                          const SpectralData& data);

extern template DecomposedModel<double> decompose<double>(
    const MatrixT<double>&, const VectorT<double>&, std::optional<double>);
extern template DecomposedModel<Complex> decompose<Complex>(
    const MatrixT<Complex>&, const VectorT<Complex>&, std::optional<double>);
extern template SpectralData spectral_data<double>(const Decomposition<double>&,
                                                   const VectorT<double>&);
extern template SpectralData spectral_data<Complex>(
    const Decomposition<Complex>&, const VectorT<Complex>&);

}  // namespace copra

#endif  // COPRA_SPECTRAL_HPP_
