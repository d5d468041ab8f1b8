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

// Monte-Carlo model generation for the three benchmark scenarios.
//
//   s1: 100 x 90 complex Gaussian H, real i.i.d. N(0,1) x, SNR sweep.
//   s2: 100 x 100 real Gaussian H, independent non-identical x (even
//       entries N(0,1), odd entries U[-sqrt 3, sqrt 3]), SNR sweep.
//   s3: 100 x 100 complex Gaussian H, Gray 8-QAM x, Eb/N0 sweep.
//
// SNR is calibrated per realization: sigma_z^2 = ||Hx||^2 / (M 10^(dB/10)).
// On the Eb/N0 axis sigma_z^2 = 1 / (3 10^(dB/10)) (unit symbol energy,
// 3 bits per symbol).

#ifndef COPRA_SCENARIO_HPP_
#define COPRA_SCENARIO_HPP_

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "copra/spectral.hpp"

namespace copra {

enum class ScenarioId { kS1, kS2, kS3 };
enum class Field { kReal, kComplex };
enum class SignalKind { kGaussianIid, kGaussianInd, kQam8Gray };
enum class SweepAxis { kSnr, kEbN0 };

const char* to_string(ScenarioId id);
const char* to_string(Field field);
const char* to_string(SignalKind kind);
const char* to_string(SweepAxis axis);
// "s1", "s2", "s3" (case-insensitive); throws ConfigError.
ScenarioId parse_scenario(std::string_view name);

// "lo:step:hi" inclusive; throws ConfigError.
std::vector<double> parse_sweep(std::string_view spec);

struct ScenarioConfig {
  ScenarioId id = ScenarioId::kS1;
  Index rows = 100;
  Index cols = 90;
  Field field = Field::kComplex;
  SignalKind signal = SignalKind::kGaussianIid;
  SweepAxis axis = SweepAxis::kSnr;
  std::vector<double> sweep;
  int trials = 1000;
  std::uint64_t master_seed = 1;

  // Paper-geometry defaults with the desk-scale sweep and trial count.
  static ScenarioConfig preset(ScenarioId id);

  // Throws ConfigError: trials >= 1, sweep nonempty and strictly increasing,
  // positive dimensions, QAM only on a complex field with the Eb/N0 axis.
  void validate() const;
};

template <typename Scalar>
struct ModelInstance {
  MatrixT<Scalar> h;
  VectorT<Scalar> x_true;
  VectorT<Scalar> z;
  VectorT<Scalar> y;
  double sigma_z_sq = 0.0;
  double sweep_db = 0.0;
  std::vector<std::uint8_t> bits;  // transmitted bits for QAM signals
};

using AnyInstance = std::variant<ModelInstance<double>, ModelInstance<Complex>>;

// Deterministic per-trial seed from (master seed, scenario, sweep point, trial).
std::uint64_t trial_seed(std::uint64_t master_seed, ScenarioId id,
                         double sweep_db, int trial_index);

// Throws ConfigError for an invalid config or trial_index outside
// [0, cfg.trials).
AnyInstance generate_instance(const ScenarioConfig& cfg, double sweep_db,
                              int trial_index);

}  // namespace copra

#endif  // COPRA_SCENARIO_HPP_
