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

#include <arm_neon.h>

#include "copra/kernels.hpp"

namespace copra::kernels::detail {

ShiftedMoments shifted_moments_neon(const double* s, const double* b,
                                    std::size_t n, double shift) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t c = vdupq_n_f64(shift);
  float64x2_t plain_sq = vdupq_n_f64(0.0);
  float64x2_t weighted_sq = vdupq_n_f64(0.0);
  float64x2_t plain_cube = vdupq_n_f64(0.0);
  float64x2_t weighted_cube = vdupq_n_f64(0.0);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t sv = vld1q_f64(s + i);
    const float64x2_t bv = vld1q_f64(b + i);
    const float64x2_t inv = vdivq_f64(one, vaddq_f64(sv, c));
    const float64x2_t w = vmulq_f64(bv, vmulq_f64(inv, inv));
    const float64x2_t w3 = vmulq_f64(w, inv);
    plain_sq = vaddq_f64(plain_sq, w);
    weighted_sq = vfmaq_f64(weighted_sq, sv, w);
    plain_cube = vaddq_f64(plain_cube, w3);
    weighted_cube = vfmaq_f64(weighted_cube, sv, w3);
  }

  ShiftedMoments m{vaddvq_f64(weighted_sq), vaddvq_f64(plain_sq),
                   vaddvq_f64(weighted_cube), vaddvq_f64(plain_cube)};
  if (i < n) {
    const ShiftedMoments tail = shifted_moments_scalar(s + i, b + i, n - i, shift);
    m.weighted_sq += tail.weighted_sq;
    m.plain_sq += tail.plain_sq;
    m.weighted_cube += tail.weighted_cube;
    m.plain_cube += tail.plain_cube;
  }
  return m;
}

FilterSums filter_sums_neon(const double* s, const double* b, std::size_t n,
                            double gamma) {
  const float64x2_t one = vdupq_n_f64(1.0);
  const float64x2_t g = vdupq_n_f64(gamma);
  float64x2_t residual = vdupq_n_f64(0.0);
  float64x2_t slack = vdupq_n_f64(0.0);
  float64x2_t quasi = vdupq_n_f64(0.0);

  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t sv = vld1q_f64(s + i);
    const float64x2_t bv = vld1q_f64(b + i);
    const float64x2_t inv = vdivq_f64(one, vaddq_f64(sv, g));
    const float64x2_t shrink = vmulq_f64(g, inv);
    const float64x2_t r = vmulq_f64(vmulq_f64(shrink, shrink), bv);
    residual = vaddq_f64(residual, r);
    slack = vaddq_f64(slack, shrink);
    quasi = vfmaq_f64(quasi, vmulq_f64(r, sv), vmulq_f64(inv, inv));
  }

  FilterSums f{vaddvq_f64(residual), vaddvq_f64(slack), vaddvq_f64(quasi)};
  if (i < n) {
    const FilterSums tail = filter_sums_scalar(s + i, b + i, n - i, gamma);
    f.residual += tail.residual;
    f.slack += tail.slack;
    f.quasi += tail.quasi;
  }
  return f;
}

}  // namespace copra::kernels::detail
