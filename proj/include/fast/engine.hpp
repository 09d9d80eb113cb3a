// Copyright 2026 The fastrelease Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAST_ENGINE_HPP_
#define FAST_ENGINE_HPP_

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "fast/budget.hpp"
#include "fast/kalman.hpp"
#include "fast/particle.hpp"
#include "fast/random_source.hpp"
#include "fast/release.hpp"
#include "fast/sampler.hpp"
#include "fast/series.hpp"

namespace fast {

struct KalmanParams {
  double process_noise = 1e5;
  double measurement_noise = 1e6;
};

struct ParticleParams {
  int count = 1000;
  double process_noise = 1e5;
};

using FilterParams = std::variant<KalmanParams, ParticleParams>;

struct FixedSampling {
  int interval = 1;
};

struct AdaptiveSampling {
  PidGains gains{};
  double theta = 10.0;
  double set_point = 0.1;
};

using SamplingPolicy = std::variant<FixedSampling, AdaptiveSampling>;

struct EngineConfig {
  double total_budget = 1.0;
  // Cap on noisy observations. 0 means derive it: fixed-rate sampling
  // uses its schedule size ceil(T / interval); adaptive sampling has no
  // natural derivation, so there it must be set explicitly.
  int max_samples = 0;
  FilterParams filter = KalmanParams{};
  SamplingPolicy sampling = AdaptiveSampling{};
  // Floor for the feedback-error denominator.
  double sanitary_bound = 1.0;
  std::uint64_t seed = 0;
};

// The only gate between the raw stream and the rest of the engine. Every
// successful observation charges the ledger one per-sample share and
// returns raw + Laplace(0, per_sample_scale); once the ledger is
// exhausted the channel returns nothing and, crucially, draws nothing.
// Keeping raw access confined here makes the budget accounting auditable:
// noise invocations == ledger charges, by construction.
class ObservationChannel {
 public:
  ObservationChannel(BudgetLedger& ledger, RandomSource& rng)
      : ledger_(&ledger), rng_(&rng) {}

  struct Observation {
    double value = 0.0;
    double budget_spent = 0.0;
  };

  std::optional<Observation> observe(double raw_value) {
    const std::optional<double> charged = ledger_->charge();
    if (!charged.has_value()) {
      return std::nullopt;
    }
    ++invocations_;
    return Observation{raw_value + rng_->laplace(ledger_->per_sample_scale()),
                       *charged};
  }

  // Laplace draws made on raw data so far.
  long invocations() const { return invocations_; }
  double noise_scale() const { return ledger_->per_sample_scale(); }

 private:
  BudgetLedger* ledger_;
  RandomSource* rng_;
  long invocations_ = 0;
};

// Streaming release engine: one call to step() per incoming raw value, one
// ReleaseRecord out. Internally it runs predict on every timestamp, asks
// the sampling policy whether to observe, corrects and releases the
// posterior when an observation happens, and releases the prior otherwise.
//
// Holds references into its own members (the channel points at the ledger
// and RNG), so it is pinned: no copies, no moves.
class Engine {
 public:
  Engine(const EngineConfig& config, int series_length);

  Engine(const Engine&) = delete;
  Engine& operator=(const Engine&) = delete;

  // Processes the next timestamp. Values must arrive in stream order;
  // the engine assigns timestamps 0, 1, 2, ... itself.
  ReleaseRecord step(double raw_value);

  std::int64_t next_timestamp() const { return next_timestamp_; }
  const BudgetLedger& ledger() const { return ledger_; }
  const ObservationChannel& channel() const { return channel_; }
  int max_samples() const { return ledger_.max_samples(); }

 private:
  bool is_scheduled(std::int64_t k);
  void deliver_feedback(std::int64_t k, double error);
  double predict();
  double correct(double z);

  EngineConfig config_;
  RandomSource rng_;
  BudgetLedger ledger_;
  ObservationChannel channel_;
  std::optional<KalmanFilter> kalman_;
  std::optional<ParticleFilter> particle_;
  std::optional<AdaptiveSampler> adaptive_;
  int fixed_interval_ = 0;
  std::int64_t next_timestamp_ = 0;
};

// Runs a fresh engine over the whole series and returns its release log,
// one record per timestamp. Deterministic given config.seed.
std::vector<ReleaseRecord> engine_run(const EngineConfig& config, const TimeSeries& series);

}  // namespace fast

#endif  // FAST_ENGINE_HPP_
