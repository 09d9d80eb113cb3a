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

#include "fast/engine.hpp"

#include <stdexcept>

namespace fast {
namespace {

int resolve_max_samples(const EngineConfig& config, int series_length) {
  if (series_length < 1) {
    throw std::invalid_argument("Engine: series_length must be at least 1");
  }
  int resolved = config.max_samples;
  if (resolved == 0) {
    const auto* fixed = std::get_if<FixedSampling>(&config.sampling);
    if (fixed == nullptr) {
      throw std::invalid_argument(
          "Engine: max_samples must be set explicitly for adaptive sampling");
    }
    if (fixed->interval < 1) {
      throw std::invalid_argument("Engine: sampling interval must be at least 1");
    }
    resolved = (series_length + fixed->interval - 1) / fixed->interval;
  }
  if (resolved < 1 || resolved > series_length) {
    throw std::invalid_argument("Engine: max_samples must lie in [1, series_length]");
  }
  return resolved;
}

}  // namespace

Engine::Engine(const EngineConfig& config, int series_length)
    : config_(config),
      rng_(config.seed),
      ledger_(config.total_budget, resolve_max_samples(config, series_length)),
      channel_(ledger_, rng_) {
  if (!(config.sanitary_bound > 0.0)) {
    throw std::invalid_argument("Engine: sanitary_bound must be positive");
  }
  if (const auto* kalman = std::get_if<KalmanParams>(&config_.filter)) {
    if (!(kalman->process_noise > 0.0) || !(kalman->measurement_noise > 0.0)) {
      throw std::invalid_argument("Engine: Kalman noise parameters must be positive");
    }
  } else {
    const auto& particle = std::get<ParticleParams>(config_.filter);
    if (particle.count < 1) {
      throw std::invalid_argument("Engine: particle count must be at least 1");
    }
    if (!(particle.process_noise > 0.0)) {
      throw std::invalid_argument("Engine: particle process_noise must be positive");
    }
  }
  if (const auto* fixed = std::get_if<FixedSampling>(&config_.sampling)) {
    if (fixed->interval < 1) {
      throw std::invalid_argument("Engine: sampling interval must be at least 1");
    }
    fixed_interval_ = fixed->interval;
  } else {
    const auto& adaptive = std::get<AdaptiveSampling>(config_.sampling);
    adaptive_.emplace(adaptive.gains, adaptive.theta, adaptive.set_point);
  }
}

bool Engine::is_scheduled(std::int64_t k) {
  if (adaptive_.has_value()) {
    return adaptive_->step(k);
  }
  return fixed_is_sampling_point(k, fixed_interval_);
}

void Engine::deliver_feedback(std::int64_t k, double error) {
  if (adaptive_.has_value()) {
    adaptive_->step(k, error);
  }
}

double Engine::predict() {
  if (kalman_.has_value()) {
    return kalman_->predict();
  }
  return particle_->predict(std::get<ParticleParams>(config_.filter).process_noise, rng_);
}

double Engine::correct(double z) {
  if (kalman_.has_value()) {
    return kalman_->correct(z);
  }
  return particle_->correct(z, ledger_.per_sample_scale(), rng_);
}

ReleaseRecord Engine::step(double raw_value) {
  const std::int64_t k = next_timestamp_++;
  ReleaseRecord record;
  record.timestamp = k;

  if (k == 0) {
    // Both policies schedule timestamp 0 and the ledger allows at least
    // one charge, so the first observation always succeeds. The filters
    // bootstrap from it: nothing better than the noisy value exists yet,
    // so it is released as-is.
    const std::optional<ObservationChannel::Observation> first =
        channel_.observe(raw_value);
    if (const auto* kalman = std::get_if<KalmanParams>(&config_.filter)) {
      kalman_.emplace(first->value, kalman->process_noise, kalman->measurement_noise);
      record.kind = ReleaseKind::kPosterior;
    } else {
      const auto& particle = std::get<ParticleParams>(config_.filter);
      particle_.emplace(first->value, particle.count, ledger_.per_sample_scale(), rng_);
      record.kind = ReleaseKind::kRawPerturbed;
    }
    record.released = first->value;
    record.sampled = true;
    record.budget_spent = first->budget_spent;
    // With no prediction to deviate from, the bootstrap feedback error is
    // defined as zero; it exists to advance the adaptive schedule.
    deliver_feedback(k, 0.0);
    return record;
  }

  const double prior = predict();
  std::optional<ObservationChannel::Observation> observation;
  if (is_scheduled(k)) {
    // An exhausted ledger turns a scheduled point into a skipped one.
    // Under adaptive sampling no feedback follows, so the schedule
    // freezes and sampling stays off for the rest of the stream.
    observation = channel_.observe(raw_value);
  }
  if (observation.has_value()) {
    const double posterior = correct(observation->value);
    record.released = posterior;
    record.sampled = true;
    record.budget_spent = observation->budget_spent;
    record.kind = ReleaseKind::kPosterior;
    deliver_feedback(k, feedback_error(posterior, prior, config_.sanitary_bound));
  } else {
    record.released = prior;
    record.kind = ReleaseKind::kPrior;
  }
  return record;
}

std::vector<ReleaseRecord> engine_run(const EngineConfig& config, const TimeSeries& series) {
  if (series.empty()) {
    throw std::invalid_argument("engine_run: series must not be empty");
  }
  Engine engine(config, static_cast<int>(series.size()));
  std::vector<ReleaseRecord> log;
  log.reserve(series.size());
  for (double value : series) {
    log.push_back(engine.step(value));
  }
  return log;
}

}  // namespace fast
