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

#include "copra/kernels.hpp"

namespace copra::kernels::detail {

ShiftedMoments shifted_moments_scalar(const double* s, const double* b,
                                      std::size_t n, double shift) {
  ShiftedMoments m;
  for (std::size_t i = 0; i < n; ++i) {
    const double inv = 1.0 / (s[i] + shift);
    const double w = b[i] * inv * inv;
    m.plain_sq += w;
    m.weighted_sq += s[i] * w;
    m.plain_cube += w * inv;
    m.weighted_cube += s[i] * w * inv;
  }
  return m;
}

FilterSums filter_sums_scalar(const double* s, const double* b, std::size_t n,
                              double gamma) {
  FilterSums f;
  for (std::size_t i = 0; i < n; ++i) {
    const double inv = 1.0 / (s[i] + gamma);
    const double shrink = gamma * inv;  // 1 - filter factor
    const double r = shrink * shrink * b[i];
    f.residual += r;
    f.slack += shrink;
    f.quasi += r * s[i] * inv * inv;
  }
  return f;
}

}  // namespace copra::kernels::detail
