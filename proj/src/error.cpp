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

#include "copra/error.hpp"

namespace copra {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInvalidInput:
      return "invalid input";
    case ErrorKind::kDomain:
      return "domain error";
    case ErrorKind::kDegenerate:
      return "degenerate model";
    case ErrorKind::kSingular:
      return "singular system";
    case ErrorKind::kNonConvergence:
      return "non-convergence";
    case ErrorKind::kConfig:
      return "configuration error";
    case ErrorKind::kIo:
      return "i/o error";
  }
  return "error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kDegenerate:
    case ErrorKind::kSingular:
    case ErrorKind::kNonConvergence:
      return 2;
    default:
      return 1;
  }
}

}  // namespace copra
