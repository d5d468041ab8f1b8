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

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cmath>
#include <random>
#include <sstream>

#include "copra/error.hpp"
#include "copra/qam8.hpp"
#include "copra/scenario.hpp"

namespace copra {
namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::vector<double> inclusive_range(double lo, double step, double hi) {
  std::vector<double> out;
  for (int k = 0;; ++k) {
    const double v = lo + step * k;
    if (v > hi + 1e-9 * step) break;
    out.push_back(v);
  }
  return out;
}

template <typename Scalar>
VectorT<Scalar> draw_signal(const ScenarioConfig& cfg, std::mt19937_64& rng,
                            std::vector<std::uint8_t>& bits) {
  const Index n = cfg.cols;
  VectorT<Scalar> x(n);
  std::normal_distribution<double> normal(0.0, 1.0);
  switch (cfg.signal) {
    case SignalKind::kGaussianIid:
      for (Index k = 0; k < n; ++k) x(k) = Scalar(normal(rng));
      break;
    case SignalKind::kGaussianInd: {
      const double edge = std::sqrt(3.0);
      std::uniform_real_distribution<double> uniform(-edge, edge);
      for (Index k = 0; k < n; ++k) {
        x(k) = Scalar(k % 2 == 0 ? normal(rng) : uniform(rng));
      }
      break;
    }
    case SignalKind::kQam8Gray:
      if constexpr (std::is_same_v<Scalar, Complex>) {
        bits.resize(static_cast<std::size_t>(3 * n));
        for (auto& b : bits) b = static_cast<std::uint8_t>(rng() >> 63);
        const std::vector<Complex> symbols = qam8_mod(bits);
        for (Index k = 0; k < n; ++k) x(k) = symbols[static_cast<std::size_t>(k)];
      } else {
        throw ConfigError("8-QAM signals need a complex field");
      }
      break;
  }
  return x;
}

template <typename Scalar>
ModelInstance<Scalar> generate(const ScenarioConfig& cfg, double sweep_db,
                               int trial_index) {
  std::mt19937_64 rng(trial_seed(cfg.master_seed, cfg.id, sweep_db, trial_index));
  std::normal_distribution<double> normal(0.0, 1.0);
  constexpr bool kComplex = std::is_same_v<Scalar, Complex>;

  ModelInstance<Scalar> inst;
  inst.sweep_db = sweep_db;
  inst.h.resize(cfg.rows, cfg.cols);
  const double half = std::sqrt(0.5);
  for (Index j = 0; j < cfg.cols; ++j) {
    for (Index i = 0; i < cfg.rows; ++i) {
      if constexpr (kComplex) {
        const double re = normal(rng);
        const double im = normal(rng);
        inst.h(i, j) = Complex(half * re, half * im);
      } else {
        inst.h(i, j) = normal(rng);
      }
    }
  }
  inst.x_true = draw_signal<Scalar>(cfg, rng, inst.bits);

  const VectorT<Scalar> hx = inst.h * inst.x_true;
  const double linear = std::pow(10.0, sweep_db / 10.0);
  if (cfg.axis == SweepAxis::kSnr) {
    inst.sigma_z_sq = hx.squaredNorm() / (static_cast<double>(cfg.rows) * linear);
  } else {
    inst.sigma_z_sq = 1.0 / (3.0 * linear);
  }

  inst.z.resize(cfg.rows);
  for (Index i = 0; i < cfg.rows; ++i) {
    if constexpr (kComplex) {
      const double sd = std::sqrt(0.5 * inst.sigma_z_sq);
      const double re = normal(rng);
      const double im = normal(rng);
      inst.z(i) = Complex(sd * re, sd * im);
    } else {
      inst.z(i) = std::sqrt(inst.sigma_z_sq) * normal(rng);
    }
  }
  inst.y = hx + inst.z;
  return inst;
}

}  // namespace

const char* to_string(ScenarioId id) {
  switch (id) {
    case ScenarioId::kS1:
      return "s1";
    case ScenarioId::kS2:
      return "s2";
    case ScenarioId::kS3:
      return "s3";
  }
  return "unknown";
}

const char* to_string(Field field) {
  return field == Field::kReal ? "real" : "complex";
}

const char* to_string(SignalKind kind) {
  switch (kind) {
    case SignalKind::kGaussianIid:
      return "gaussian_iid";
    case SignalKind::kGaussianInd:
      return "gaussian_ind";
    case SignalKind::kQam8Gray:
      return "qam8_gray";
  }
  return "unknown";
}

const char* to_string(SweepAxis axis) {
  return axis == SweepAxis::kSnr ? "snr_db" : "ebn0_db";
}

ScenarioId parse_scenario(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  for (ScenarioId id : {ScenarioId::kS1, ScenarioId::kS2, ScenarioId::kS3}) {
    if (lower == to_string(id)) return id;
  }
  throw ConfigError("unknown scenario '" + std::string(name) + "' (expected s1, s2 or s3)");
}

std::vector<double> parse_sweep(std::string_view spec) {
  double parts[3] = {0.0, 0.0, 0.0};
  std::size_t start = 0;
  for (int k = 0; k < 3; ++k) {
    const auto colon = spec.find(':', start);
    if ((k < 2) == (colon == std::string_view::npos)) {
      throw ConfigError("sweep must look like lo:step:hi, got '" + std::string(spec) + "'");
    }
    std::string_view field = spec.substr(start, colon - start);
    if (!field.empty() && field.front() == '+') field.remove_prefix(1);
    const auto [ptr, ec] =
        std::from_chars(field.data(), field.data() + field.size(), parts[k]);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty()) {
      throw ConfigError("bad number '" + std::string(field) + "' in sweep");
    }
    start = colon + 1;
  }
  if (!(parts[1] > 0.0) || !(parts[2] >= parts[0])) {
    throw ConfigError("sweep needs step > 0 and hi >= lo");
  }
  return inclusive_range(parts[0], parts[1], parts[2]);
}

ScenarioConfig ScenarioConfig::preset(ScenarioId id) {
  ScenarioConfig cfg;
  cfg.id = id;
  switch (id) {
    case ScenarioId::kS1:
      cfg.rows = 100;
      cfg.cols = 90;
      cfg.field = Field::kComplex;
      cfg.signal = SignalKind::kGaussianIid;
      cfg.axis = SweepAxis::kSnr;
      cfg.sweep = inclusive_range(-10.0, 5.0, 30.0);
      break;
    case ScenarioId::kS2:
      cfg.rows = 100;
      cfg.cols = 100;
      cfg.field = Field::kReal;
      cfg.signal = SignalKind::kGaussianInd;
      cfg.axis = SweepAxis::kSnr;
      cfg.sweep = inclusive_range(-10.0, 5.0, 30.0);
      break;
    case ScenarioId::kS3:
      cfg.rows = 100;
      cfg.cols = 100;
      cfg.field = Field::kComplex;
      cfg.signal = SignalKind::kQam8Gray;
      cfg.axis = SweepAxis::kEbN0;
      cfg.sweep = inclusive_range(0.0, 3.0, 24.0);
      break;
  }
  return cfg;
}

void ScenarioConfig::validate() const {
  if (trials < 1) throw ConfigError("trials must be >= 1");
  if (rows < 1 || cols < 1) throw ConfigError("dimensions must be >= 1");
  if (sweep.empty()) throw ConfigError("sweep must be nonempty");
  for (std::size_t k = 0; k < sweep.size(); ++k) {
    if (!std::isfinite(sweep[k])) throw ConfigError("sweep points must be finite");
    if (k > 0 && !(sweep[k] > sweep[k - 1])) {
      throw ConfigError("sweep must be strictly increasing");
    }
  }
  if (signal == SignalKind::kQam8Gray && field != Field::kComplex) {
    throw ConfigError("8-QAM signals need a complex field");
  }
  if ((axis == SweepAxis::kEbN0) != (signal == SignalKind::kQam8Gray)) {
    throw ConfigError("the Eb/N0 axis is defined for 8-QAM signals only");
  }
}

std::uint64_t trial_seed(std::uint64_t master_seed, ScenarioId id,
                         double sweep_db, int trial_index) {
  const double canonical = sweep_db == 0.0 ? 0.0 : sweep_db;  // fold -0.0
  std::uint64_t h = splitmix64(master_seed);
  h = splitmix64(h ^ (static_cast<std::uint64_t>(id) + 1));
  h = splitmix64(h ^ std::bit_cast<std::uint64_t>(canonical));
  h = splitmix64(h ^ static_cast<std::uint64_t>(trial_index));
  return h;
}

AnyInstance generate_instance(const ScenarioConfig& cfg, double sweep_db,
                              int trial_index) {
  cfg.validate();
  if (trial_index < 0 || trial_index >= cfg.trials) {
    std::ostringstream msg;
    msg << "trial index " << trial_index << " outside [0, " << cfg.trials << ")";
    throw ConfigError(msg.str());
  }
  if (cfg.field == Field::kReal) return generate<double>(cfg, sweep_db, trial_index);
  return generate<Complex>(cfg, sweep_db, trial_index);
}

}  // namespace copra
