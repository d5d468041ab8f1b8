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

#include <cstdlib>
#include <cstring>

#include "copra/kernels.hpp"

namespace copra::kernels {
namespace {

constexpr KernelTable kScalarTable{Backend::kScalar,
                                   &detail::shifted_moments_scalar,
                                   &detail::filter_sums_scalar};

#if defined(COPRA_HAVE_AVX2_KERNELS)
constexpr KernelTable kAvx2Table{Backend::kAvx2, &detail::shifted_moments_avx2,
                                 &detail::filter_sums_avx2};

bool cpu_has_avx2() {
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
}
#endif

#if defined(COPRA_HAVE_NEON_KERNELS)
// Advanced SIMD is mandatory on aarch64.
constexpr KernelTable kNeonTable{Backend::kNeon, &detail::shifted_moments_neon,
                                 &detail::filter_sums_neon};
#endif

const KernelTable& select_table() {
  const char* forced = std::getenv("COPRA_KERNELS");
  if (forced != nullptr && std::strcmp(forced, "scalar") == 0) {
    return kScalarTable;
  }
#if defined(COPRA_HAVE_AVX2_KERNELS)
  if (cpu_has_avx2()) return kAvx2Table;
#endif
#if defined(COPRA_HAVE_NEON_KERNELS)
  return kNeonTable;
#endif
  return kScalarTable;
}

}  // namespace

std::string_view to_string(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return "scalar";
    case Backend::kAvx2:
      return "avx2";
    case Backend::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& active() {
  static const KernelTable& table = select_table();
  return table;
}

const KernelTable* table_for(Backend backend) {
  switch (backend) {
    case Backend::kScalar:
      return &kScalarTable;
    case Backend::kAvx2:
#if defined(COPRA_HAVE_AVX2_KERNELS)
      if (cpu_has_avx2()) return &kAvx2Table;
#endif
      return nullptr;
    case Backend::kNeon:
#if defined(COPRA_HAVE_NEON_KERNELS)
      return &kNeonTable;
#endif
      return nullptr;
  }
  return nullptr;
}

std::vector<Backend> available_backends() {
  std::vector<Backend> out;
  for (Backend b : {Backend::kScalar, Backend::kAvx2, Backend::kNeon}) {
    if (table_for(b) != nullptr) out.push_back(b);
  }
  return out;
}

}  // namespace copra::kernels
