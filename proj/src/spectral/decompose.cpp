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
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "copra/error.hpp"
#include "copra/spectral.hpp"

namespace copra {
namespace {

template <typename Derived>
bool all_finite(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j) {
    for (Index i = 0; i < m.rows(); ++i) {
      const auto v = m(i, j);
      if (!std::isfinite(std::real(v)) || !std::isfinite(std::imag(v))) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace

SpectralData::SpectralData(std::vector<double> sigma_sq,
                           std::vector<double> b_sq, Index rows, Index cols,
                           double discarded_energy)
    : sigma_sq_(std::move(sigma_sq)),
      b_sq_(std::move(b_sq)),
      rows_(rows),
      cols_(cols),
      discarded_energy_(discarded_energy) {
  if (sigma_sq_.empty() || sigma_sq_.size() != b_sq_.size()) {
    throw InvalidInputError("spectral data needs matching, nonempty sigma_sq/b_sq");
  }
  if (rows_ < 1 || cols_ < 1) {
    throw InvalidInputError("spectral data needs rows >= 1 and cols >= 1");
  }
  for (std::size_t i = 0; i < sigma_sq_.size(); ++i) {
    if (!(sigma_sq_[i] > 0.0) || !std::isfinite(sigma_sq_[i])) {
      throw InvalidInputError("sigma_sq entries must be finite and positive");
    }
    if (!(b_sq_[i] >= 0.0) || !std::isfinite(b_sq_[i])) {
      throw InvalidInputError("b_sq entries must be finite and nonnegative");
    }
  }
  if (!(discarded_energy_ >= 0.0) || !std::isfinite(discarded_energy_)) {
    throw InvalidInputError("discarded energy must be finite and nonnegative");
  }
}

double SpectralData::retained_energy() const {
  return std::accumulate(b_sq_.begin(), b_sq_.end(), 0.0);
}

double SpectralData::total_energy() const {
  return retained_energy() + discarded_energy_;
}

bool SpectralData::has_null_space_energy() const {
  return discarded_energy_ > 1e-12 * total_energy();
}

SpectralData SpectralData::with_scaled_energy(double alpha) const {
  if (!(alpha >= 0.0) || !std::isfinite(alpha)) {
    throw InvalidInputError("energy scale must be finite and nonnegative");
  }
  std::vector<double> b = b_sq_;
  for (double& v : b) v *= alpha;
  return SpectralData(sigma_sq_, std::move(b), rows_, cols_,
                      discarded_energy_ * alpha);
}

template <typename Scalar>
SpectralData spectral_data(const Decomposition<Scalar>& dec,
                           const VectorT<Scalar>& y) {
  if (y.size() != dec.rows()) {
    std::ostringstream msg;
    msg << "observation length " << y.size() << " does not match " << dec.rows()
        << " model rows";
    throw InvalidInputError(msg.str());
  }
  if (!all_finite(y)) throw InvalidInputError("observation has non-finite entries");

  const VectorT<Scalar> projected = dec.left_basis.adjoint() * y;
  const auto r = static_cast<std::size_t>(dec.rank);
  std::vector<double> sigma_sq(r);
  std::vector<double> b_sq(r);
  for (std::size_t i = 0; i < r; ++i) {
    const double s = dec.singular_values(static_cast<Index>(i));
    sigma_sq[i] = s * s;
    b_sq[i] = std::norm(projected(static_cast<Index>(i)));
  }
  // Energy along the remaining columns of U: exactly zero when rank == M.
  double discarded = 0.0;
  for (Index i = dec.rank; i < projected.size(); ++i) {
    discarded += std::norm(projected(i));
  }
  return SpectralData(std::move(sigma_sq), std::move(b_sq), dec.rows(),
                      dec.cols(), discarded);
}

template <typename Scalar>
DecomposedModel<Scalar> decompose(const MatrixT<Scalar>& h,
                                  const VectorT<Scalar>& y,
                                  std::optional<double> rank_tolerance) {
  if (h.rows() < 1 || h.cols() < 1) {
    throw InvalidInputError("model matrix must be at least 1x1");
  }
  if (y.size() != h.rows()) {
    std::ostringstream msg;
    msg << "observation length " << y.size() << " does not match " << h.rows()
        << " model rows";
    throw InvalidInputError(msg.str());
  }
  if (!all_finite(h)) throw InvalidInputError("model matrix has non-finite entries");

  Eigen::BDCSVD<MatrixT<Scalar>> svd(h, Eigen::ComputeFullU | Eigen::ComputeThinV);

  Decomposition<Scalar> dec;
  dec.left_basis = svd.matrixU();
  dec.right_basis = svd.matrixV();
  dec.singular_values = svd.singularValues();

  const double sigma_max = dec.singular_values.size() > 0 ? dec.singular_values(0) : 0.0;
  if (rank_tolerance.has_value() && *rank_tolerance >= 0.0) {
    dec.rank_tolerance = *rank_tolerance;
  } else {
    dec.rank_tolerance = std::numeric_limits<double>::epsilon() *
                         static_cast<double>(std::max(h.rows(), h.cols())) *
                         sigma_max;
  }
  dec.rank = 0;
  while (dec.rank < dec.singular_values.size() &&
         dec.singular_values(dec.rank) > dec.rank_tolerance) {
    ++dec.rank;
  }
  if (dec.rank == 0) {
    throw DegenerateError("every singular value is below the rank tolerance");
  }

  SpectralData data = spectral_data(dec, y);
  return DecomposedModel<Scalar>{std::move(dec), std::move(data)};
}

template DecomposedModel<double> decompose<double>(const MatrixT<double>&,
                                                   const VectorT<double>&,
                                                   std::optional<double>);
template DecomposedModel<Complex> decompose<Complex>(const MatrixT<Complex>&,
                                                     const VectorT<Complex>&,
                                                     std::optional<double>);
template SpectralData spectral_data<double>(const Decomposition<double>&,
                                            const VectorT<double>&);
template SpectralData spectral_data<Complex>(const Decomposition<Complex>&,
                                             const VectorT<Complex>&);

}  // namespace copra
