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

#ifndef COPRA_ERROR_HPP_
#define COPRA_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace copra {

enum class ErrorKind {
  kInvalidInput,
  kDomain,
  kDegenerate,
  kSingular,
  kNonConvergence,
  kConfig,
  kIo,
};

const char* to_string(ErrorKind kind);

// Base of every error thrown by the library. The kind decides the CLI exit
// code (see exit_code_for).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

class InvalidInputError : public Error {
 public:
  explicit InvalidInputError(const std::string& what)
      : Error(ErrorKind::kInvalidInput, what) {}
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorKind::kDomain, what) {}
};

// Raised for a model whose spectrum vanishes or an observation with no
// energy in the retained modes.
class DegenerateError : public Error {
 public:
  explicit DegenerateError(const std::string& what)
      : Error(ErrorKind::kDegenerate, what) {}
};

class SingularError : public Error {
 public:
  explicit SingularError(const std::string& what)
      : Error(ErrorKind::kSingular, what) {}
};

class NonConvergenceError : public Error {
 public:
  NonConvergenceError(const std::string& what, double last_iterate,
                      int iterations)
      : Error(ErrorKind::kNonConvergence, what),
        last_iterate_(last_iterate),
        iterations_(iterations) {}

  double last_iterate() const { return last_iterate_; }
  int iterations() const { return iterations_; }

 private:
  double last_iterate_;
  int iterations_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what)
      : Error(ErrorKind::kConfig, what) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& what) : Error(ErrorKind::kIo, what) {}
};

// 1 for bad input of any sort, 2 for numerical failure.
int exit_code_for(ErrorKind kind);

}  // namespace copra

#endif  // COPRA_ERROR_HPP_
