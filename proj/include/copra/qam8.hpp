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

// Gray-labelled rectangular 8-QAM: I in {-3,-1,1,3}, Q in {-1,1}, scaled by
// 1/sqrt(6) for unit mean symbol energy. Three bits per symbol, first bit
// most significant; bits 0-1 pick the I level in Gray order and bit 2 the Q
// sign.

#ifndef COPRA_QAM8_HPP_
#define COPRA_QAM8_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "copra/spectral.hpp"

namespace copra {

// Constellation point for a 3-bit label in [0, 8).
Complex qam8_point(unsigned label);

// Throws InvalidInputError when the bit count is not a multiple of 3 or a bit
// is not 0/1.
std::vector<Complex> qam8_mod(std::span<const std::uint8_t> bits);

// Nearest-neighbour decisions; exact distance ties go to the smaller label.
std::vector<std::uint8_t> qam8_demod(std::span<const Complex> symbols);

// Fraction of differing bits; throws InvalidInputError on length mismatch
// or empty input.
double bit_error_rate(std::span<const std::uint8_t> sent,
                      std::span<const std::uint8_t> received);

// ||x_hat - x||^2 / ||x||^2. Throws InvalidInputError on length mismatch,
// DomainError when x is zero.
template <typename Scalar>
double nmse(const VectorT<Scalar>& x_true, const VectorT<Scalar>& x_hat);

}  // namespace copra

#endif  // COPRA_QAM8_HPP_
