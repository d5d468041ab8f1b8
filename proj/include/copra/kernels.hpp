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

// Data-parallel spectral sums used by the characteristic function and the
// baseline selectors. Every kernel has a scalar reference implementation;
// SIMD variants (AVX2+FMA on x86-64, NEON on aarch64) are chosen at runtime
// and must agree with the reference up to summation-order rounding.

#ifndef COPRA_KERNELS_HPP_
#define COPRA_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace copra::kernels {

// Sums over modes i of the per-mode weights w_i = b_i / (s_i + c)^2:
//   weighted_sq   = sum s_i b_i / (s_i + c)^2
//   plain_sq      = sum     b_i / (s_i + c)^2
//   weighted_cube = sum s_i b_i / (s_i + c)^3
//   plain_cube    = sum     b_i / (s_i + c)^3
struct ShiftedMoments {
  double weighted_sq = 0.0;
  double plain_sq = 0.0;
  double weighted_cube = 0.0;
  double plain_cube = 0.0;
};

// Tikhonov filter sums at regularizer g:
//   residual = sum g^2 b_i / (s_i + g)^2
//   slack    = sum g / (s_i + g), i.e. modes minus the effective dof
//   quasi    = sum g^2 s_i b_i / (s_i + g)^4
struct FilterSums {
  double residual = 0.0;
  double slack = 0.0;
  double quasi = 0.0;
};

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view to_string(Backend backend);

using ShiftedMomentsFn = ShiftedMoments (*)(const double* s, const double* b,
                                            std::size_t n, double shift);
using FilterSumsFn = FilterSums (*)(const double* s, const double* b,
                                    std::size_t n, double gamma);

struct KernelTable {
  Backend backend;
  ShiftedMomentsFn shifted_moments;
  FilterSumsFn filter_sums;
};

// The table picked for this process: the widest backend the CPU supports,
// unless COPRA_KERNELS=scalar is set in the environment.
const KernelTable& active();

// nullptr when the backend is not compiled in or the CPU lacks it.
const KernelTable* table_for(Backend backend);

// All backends usable on this machine, scalar first.
std::vector<Backend> available_backends();

inline ShiftedMoments shifted_moments(std::span<const double> s,
                                      std::span<const double> b,
                                      double shift) {
  return active().shifted_moments(s.data(), b.data(), s.size(), shift);
}

inline FilterSums filter_sums(std::span<const double> s,
                              std::span<const double> b, double gamma) {
  return active().filter_sums(s.data(), b.data(), s.size(), gamma);
}

namespace detail {
ShiftedMoments shifted_moments_scalar(const double* s, const double* b,
                                      std::size_t n, double shift);
FilterSums filter_sums_scalar(const double* s, const double* b, std::size_t n,
                              double gamma);
#if defined(COPRA_HAVE_AVX2_KERNELS)
ShiftedMoments shifted_moments_avx2(const double* s, const double* b,
                                    std::size_t n, double shift);
FilterSums filter_sums_avx2(const double* s, const double* b, std::size_t n,
                            double gamma);
#endif
#if defined(COPRA_HAVE_NEON_KERNELS)
ShiftedMoments shifted_moments_neon(const double* s, const double* b,
                                    std::size_t n, double shift);
FilterSums filter_sums_neon(const double* s, const double* b, std::size_t n,
                            double gamma);
#endif
}  // namespace detail

}  // namespace copra::kernels

#endif  // COPRA_KERNELS_HPP_
