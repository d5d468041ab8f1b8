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

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "copra/error.hpp"
#include "copra/matrix_io.hpp"

namespace copra::io {
namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_real(std::string_view token, double& out) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  if (token.empty()) return false;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc() && ptr == token.data() + token.size();
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    fields.push_back(trim(line.substr(start, comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

[[noreturn]] void fail(std::string_view source, std::size_t line,
                       const std::string& what) {
  std::ostringstream msg;
  msg << source << ":" << line << ": " << what;
  throw InvalidInputError(msg.str());
}

}  // namespace

ComplexFormat parse_complex_format(std::string_view name) {
  if (name == "real") return ComplexFormat::kReal;
  if (name == "paired") return ComplexFormat::kPaired;
  if (name == "suffix") return ComplexFormat::kSuffix;
  throw InvalidInputError("unknown complex format '" + std::string(name) +
                          "' (expected real, paired or suffix)");
}

Complex parse_complex_token(std::string_view token) {
  token = trim(token);
  if (token.empty()) throw InvalidInputError("empty complex entry");
  const char last = token.back();
  if (last != 'j' && last != 'i' && last != 'J' && last != 'I') {
    double re = 0.0;
    if (!parse_real(token, re)) {
      throw InvalidInputError("bad complex entry '" + std::string(token) + "'");
    }
    return {re, 0.0};
  }
  std::string_view body = token.substr(0, token.size() - 1);
  // Split at the last sign that is not the leading sign or an exponent sign.
  std::size_t split = std::string_view::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' &&
        body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  double re = 0.0;
  double im = 0.0;
  std::string_view im_part = split == std::string_view::npos ? body : body.substr(split);
  if (split != std::string_view::npos &&
      !parse_real(body.substr(0, split), re)) {
    throw InvalidInputError("bad complex entry '" + std::string(token) + "'");
  }
  if (im_part == "+" || im_part.empty()) {
    im = 1.0;
  } else if (im_part == "-") {
    im = -1.0;
  } else if (!parse_real(im_part, im)) {
    throw InvalidInputError("bad complex entry '" + std::string(token) + "'");
  }
  return {re, im};
}

CsvMatrix parse_matrix_csv(std::string_view text, ComplexFormat format,
                           std::string_view source) {
  std::vector<std::vector<Complex>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    const std::string_view line =
        trim(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos));
    ++line_no;
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_fields(line);
    std::vector<Complex> row;
    switch (format) {
      case ComplexFormat::kReal:
        for (const auto f : fields) {
          double v = 0.0;
          if (!parse_real(f, v)) fail(source, line_no, "bad real entry '" + std::string(f) + "'");
          row.emplace_back(v, 0.0);
        }
        break;
      case ComplexFormat::kPaired:
        if (fields.size() % 2 != 0) {
          fail(source, line_no, "paired complex format needs an even column count");
        }
        for (std::size_t k = 0; k < fields.size(); k += 2) {
          double re = 0.0;
          double im = 0.0;
          if (!parse_real(fields[k], re) || !parse_real(fields[k + 1], im)) {
            fail(source, line_no, "bad paired entry at column " + std::to_string(k + 1));
          }
          row.emplace_back(re, im);
        }
        break;
      case ComplexFormat::kSuffix:
        for (const auto f : fields) {
          try {
            row.push_back(parse_complex_token(f));
          } catch (const InvalidInputError& e) {
            fail(source, line_no, e.what());
          }
        }
        break;
    }
    if (!rows.empty() && row.size() != rows.front().size()) {
      fail(source, line_no, "row has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(rows.front().size()));
    }
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw InvalidInputError(std::string(source) + ": no data rows");
  }

  CsvMatrix out;
  out.is_complex = format != ComplexFormat::kReal;
  out.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(rows.front().size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) {
      out.values(static_cast<Index>(i), static_cast<Index>(j)) = rows[i][j];
    }
  }
  return out;
}

CsvMatrix read_matrix_csv(const std::filesystem::path& path,
                          ComplexFormat format) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return parse_matrix_csv(buf.str(), format, path.string());
}

VectorT<Complex> as_vector(const CsvMatrix& m) {
  if (m.values.cols() == 1) return m.values.col(0);
  if (m.values.rows() == 1) return m.values.row(0).transpose();
  throw InvalidInputError("expected a single row or a single column, got " +
                          std::to_string(m.values.rows()) + "x" +
                          std::to_string(m.values.cols()));
}

}  // namespace copra::io
