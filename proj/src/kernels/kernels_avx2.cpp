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

// Compiled with -mavx2 -mfma. Only reached through the dispatch table after
// a CPUID check.

#include <immintrin.h>

#include "copra/kernels.hpp"

namespace copra::kernels::detail {
namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

}  // namespace

ShiftedMoments shifted_moments_avx2(const double* s, const double* b,
                                    std::size_t n, double shift) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d c = _mm256_set1_pd(shift);
  __m256d plain_sq = _mm256_setzero_pd();
  __m256d weighted_sq = _mm256_setzero_pd();
  __m256d plain_cube = _mm256_setzero_pd();
  __m256d weighted_cube = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d bv = _mm256_loadu_pd(b + i);
    const __m256d inv = _mm256_div_pd(one, _mm256_add_pd(sv, c));
    const __m256d w = _mm256_mul_pd(bv, _mm256_mul_pd(inv, inv));
    const __m256d w3 = _mm256_mul_pd(w, inv);
    plain_sq = _mm256_add_pd(plain_sq, w);
    weighted_sq = _mm256_fmadd_pd(sv, w, weighted_sq);
    plain_cube = _mm256_add_pd(plain_cube, w3);
    weighted_cube = _mm256_fmadd_pd(sv, w3, weighted_cube);
  }

  ShiftedMoments m{hsum(weighted_sq), hsum(plain_sq), hsum(weighted_cube),
                   hsum(plain_cube)};
  if (i < n) {
    const ShiftedMoments tail = shifted_moments_scalar(s + i, b + i, n - i, shift);
    m.weighted_sq += tail.weighted_sq;
    m.plain_sq += tail.plain_sq;
    m.weighted_cube += tail.weighted_cube;
    m.plain_cube += tail.plain_cube;
  }
  return m;
}

FilterSums filter_sums_avx2(const double* s, const double* b, std::size_t n,
                            double gamma) {
  const __m256d one = _mm256_set1_pd(1.0);
  const __m256d g = _mm256_set1_pd(gamma);
  __m256d residual = _mm256_setzero_pd();
  __m256d slack = _mm256_setzero_pd();
  __m256d quasi = _mm256_setzero_pd();

  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d sv = _mm256_loadu_pd(s + i);
    const __m256d bv = _mm256_loadu_pd(b + i);
    const __m256d inv = _mm256_div_pd(one, _mm256_add_pd(sv, g));
    const __m256d shrink = _mm256_mul_pd(g, inv);
    const __m256d r = _mm256_mul_pd(_mm256_mul_pd(shrink, shrink), bv);
    residual = _mm256_add_pd(residual, r);
    slack = _mm256_add_pd(slack, shrink);
    const __m256d r_s = _mm256_mul_pd(r, sv);
    quasi = _mm256_fmadd_pd(r_s, _mm256_mul_pd(inv, inv), quasi);
  }

  FilterSums f{hsum(residual), hsum(slack), hsum(quasi)};
  if (i < n) {
    const FilterSums tail = filter_sums_scalar(s + i, b + i, n - i, gamma);
    f.residual += tail.residual;
    f.slack += tail.slack;
    f.quasi += tail.quasi;
  }
  return f;
}

}  // namespace copra::kernels::detail
