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

// CSV ingestion for the CLI: one text row per matrix row, comma separated.
// Complex entries are written either as paired columns (re,im,re,im,...)
// or as single tokens with a j/i suffix ("1.5-2j", "3", "-0.5j").

#ifndef COPRA_MATRIX_IO_HPP_
#define COPRA_MATRIX_IO_HPP_

#include <filesystem>
#include <string>
#include <string_view>

#include "copra/spectral.hpp"

namespace copra::io {

enum class ComplexFormat { kReal, kPaired, kSuffix };

// "real", "paired" or "suffix"; throws InvalidInputError otherwise.
ComplexFormat parse_complex_format(std::string_view name);

struct CsvMatrix {
  MatrixT<Complex> values;
  bool is_complex = false;

  MatrixT<double> real() const { return values.real(); }
};

// Throws InvalidInputError naming the source and line on malformed content.
CsvMatrix parse_matrix_csv(std::string_view text, ComplexFormat format,
                           std::string_view source = "<memory>");

// Throws IoError if the file cannot be read.
CsvMatrix read_matrix_csv(const std::filesystem::path& path,
                          ComplexFormat format);

// Single-token complex literal, e.g. "1e-3+2.5j".
Complex parse_complex_token(std::string_view token);

// A column (M x 1) or a row (1 x M) as a vector.
VectorT<Complex> as_vector(const CsvMatrix& m);

}  // namespace copra::io

#endif  // COPRA_MATRIX_IO_HPP_
