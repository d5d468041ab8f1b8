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

#include <array>
#include <cmath>

#include "copra/error.hpp"
#include "copra/qam8.hpp"

namespace copra {
namespace {

// Gray order of the in-phase levels indexed by the two leading bits.
constexpr std::array<double, 4> kInPhase{-3.0, -1.0, 3.0, 1.0};  // 00 01 10 11

const std::array<Complex, 8>& constellation() {
  static const std::array<Complex, 8> points = [] {
    std::array<Complex, 8> p{};
    const double scale = 1.0 / std::sqrt(6.0);
    for (unsigned label = 0; label < 8; ++label) {
      const double i = kInPhase[label >> 1];
      const double q = (label & 1U) != 0 ? 1.0 : -1.0;
      p[label] = Complex(i * scale, q * scale);
    }
    return p;
  }();
  return points;
}

}  // namespace

Complex qam8_point(unsigned label) {
  if (label >= 8) throw InvalidInputError("8-QAM label out of range");
  return constellation()[label];
}

std::vector<Complex> qam8_mod(std::span<const std::uint8_t> bits) {
  if (bits.size() % 3 != 0) {
    throw InvalidInputError("8-QAM needs a bit count divisible by 3, got " +
                            std::to_string(bits.size()));
  }
  std::vector<Complex> symbols;
  symbols.reserve(bits.size() / 3);
  for (std::size_t k = 0; k < bits.size(); k += 3) {
    if (bits[k] > 1 || bits[k + 1] > 1 || bits[k + 2] > 1) {
      throw InvalidInputError("bits must be 0 or 1");
    }
    const unsigned label = (bits[k] << 2U) | (bits[k + 1] << 1U) | bits[k + 2];
    symbols.push_back(constellation()[label]);
  }
  return symbols;
}

std::vector<std::uint8_t> qam8_demod(std::span<const Complex> symbols) {
  std::vector<std::uint8_t> bits;
  bits.reserve(3 * symbols.size());
  const auto& points = constellation();
  for (const Complex& s : symbols) {
    unsigned best = 0;
    double best_dist = std::norm(s - points[0]);
    for (unsigned label = 1; label < 8; ++label) {
      const double d = std::norm(s - points[label]);
      if (d < best_dist) {
        best = label;
        best_dist = d;
      }
    }
    bits.push_back(static_cast<std::uint8_t>((best >> 2U) & 1U));
    bits.push_back(static_cast<std::uint8_t>((best >> 1U) & 1U));
    bits.push_back(static_cast<std::uint8_t>(best & 1U));
  }
  return bits;
}

double bit_error_rate(std::span<const std::uint8_t> sent,
                      std::span<const std::uint8_t> received) {
  if (sent.empty() || sent.size() != received.size()) {
    throw InvalidInputError("bit streams must be nonempty and equally long");
  }
  std::size_t errors = 0;
  for (std::size_t k = 0; k < sent.size(); ++k) errors += sent[k] != received[k];
  return static_cast<double>(errors) / static_cast<double>(sent.size());
}

template <typename Scalar>
double nmse(const VectorT<Scalar>& x_true, const VectorT<Scalar>& x_hat) {
  if (x_true.size() != x_hat.size()) {
    throw InvalidInputError("nmse needs equally long vectors");
  }
  const double ref = x_true.squaredNorm();
  if (!(ref > 0.0)) throw DomainError("nmse is undefined for a zero truth vector");
  return (x_hat - x_true).squaredNorm() / ref;
}

template double nmse<double>(const VectorT<double>&, const VectorT<double>&);
template double nmse<Complex>(const VectorT<Complex>&, const VectorT<Complex>&);

}  // namespace copra
