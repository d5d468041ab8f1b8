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

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "copra/error.hpp"
#include "copra/matrix_io.hpp"

namespace copra::io {
namespace {

TEST(ComplexToken, Forms) {
  EXPECT_EQ(parse_complex_token("1e-3+2.5j"), Complex(1e-3, 2.5));
  EXPECT_EQ(parse_complex_token("-0.5j"), Complex(0.0, -0.5));
  EXPECT_EQ(parse_complex_token("j"), Complex(0.0, 1.0));
  EXPECT_EQ(parse_complex_token("1-j"), Complex(1.0, -1.0));
  EXPECT_EQ(parse_complex_token("3.25"), Complex(3.25, 0.0));
  EXPECT_EQ(parse_complex_token("-2-4i"), Complex(-2.0, -4.0));
  EXPECT_EQ(parse_complex_token("2e+3-1e-2j"), Complex(2e3, -1e-2));
}

TEST(ComplexToken, Rejects) {
  EXPECT_THROW(parse_complex_token(""), InvalidInputError);
  EXPECT_THROW(parse_complex_token("abc"), InvalidInputError);
  EXPECT_THROW(parse_complex_token("1+2"), InvalidInputError);
  EXPECT_THROW(parse_complex_token("1+xj"), InvalidInputError);
}

TEST(ParseCsv, RealMatrixSkipsCommentsAndBlanks) {
  const auto m = parse_matrix_csv("# header\n1, 2,3\n\n4,5,6\n", ComplexFormat::kReal);
  EXPECT_FALSE(m.is_complex);
  ASSERT_EQ(m.values.rows(), 2);
  ASSERT_EQ(m.values.cols(), 3);
  EXPECT_EQ(m.real()(1, 2), 6.0);
  EXPECT_EQ(m.real()(0, 1), 2.0);
}

TEST(ParseCsv, PairedAndSuffixAgree) {
  const auto paired = parse_matrix_csv("1,2,3,-4\n0,1,5,0\n", ComplexFormat::kPaired);
  const auto suffix = parse_matrix_csv("1+2j,3-4j\nj,5\n", ComplexFormat::kSuffix);
  EXPECT_TRUE(paired.is_complex);
  ASSERT_EQ(paired.values.rows(), 2);
  ASSERT_EQ(paired.values.cols(), 2);
  EXPECT_EQ(paired.values, suffix.values);
}

TEST(ParseCsv, ErrorsCarryLocation) {
  try {
    parse_matrix_csv("1,2\n3,x\n", ComplexFormat::kReal, "H.csv");
    FAIL() << "expected an error";
  } catch (const InvalidInputError& e) {
    EXPECT_NE(std::string(e.what()).find("H.csv:2"), std::string::npos) << e.what();
  }
  EXPECT_THROW(parse_matrix_csv("1,2\n3\n", ComplexFormat::kReal), InvalidInputError);
  EXPECT_THROW(parse_matrix_csv("1,2,3\n", ComplexFormat::kPaired), InvalidInputError);
  EXPECT_THROW(parse_matrix_csv("# nothing\n\n", ComplexFormat::kReal), InvalidInputError);
}

TEST(ParseCsv, FormatNames) {
  EXPECT_EQ(parse_complex_format("paired"), ComplexFormat::kPaired);
  EXPECT_EQ(parse_complex_format("suffix"), ComplexFormat::kSuffix);
  EXPECT_EQ(parse_complex_format("real"), ComplexFormat::kReal);
  EXPECT_THROW(parse_complex_format("polar"), InvalidInputError);
}

TEST(AsVector, RowOrColumn) {
  const auto col = as_vector(parse_matrix_csv("1\n2\n3\n", ComplexFormat::kReal));
  const auto row = as_vector(parse_matrix_csv("1,2,3\n", ComplexFormat::kReal));
  EXPECT_EQ(col, row);
  EXPECT_EQ(col.size(), 3);
  EXPECT_THROW(as_vector(parse_matrix_csv("1,2\n3,4\n", ComplexFormat::kReal)),
               InvalidInputError);
}

TEST(ReadCsv, FileRoundTripAndMissingFile) {
  const auto path = std::filesystem::temp_directory_path() / "copra_matrix_io_test.csv";
  {
    std::ofstream out(path);
    out << "0.5,-1.5\n2,4e-1\n";
  }
  const auto m = read_matrix_csv(path, ComplexFormat::kReal);
  EXPECT_EQ(m.real()(1, 1), 0.4);
  std::filesystem::remove(path);
  EXPECT_THROW(read_matrix_csv(path, ComplexFormat::kReal), IoError);
}

}  // namespace
}  // namespace copra::io
