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

#include "fast/particle.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fast {

std::vector<double> measurement_weights(std::span<const double> particles, double z,
                                        double scale, bool* degenerate) {
  if (particles.empty()) {
    throw std::invalid_argument("measurement_weights: particle set must not be empty");
  }
  if (!(scale > 0.0)) {
    throw std::invalid_argument("measurement_weights: scale must be positive");
  }

  std::vector<double> weights(particles.size());
  double max_log = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < particles.size(); ++i) {
    weights[i] = -std::abs(z - particles[i]) / scale;
    max_log = std::max(max_log, weights[i]);
  }

  double sum = 0.0;
  if (std::isfinite(max_log)) {
    for (double& w : weights) {
      w = std::exp(w - max_log);
      sum += w;
    }
  }

  const bool fell_back = !(sum > 0.0) || !std::isfinite(sum);
  if (fell_back) {
    std::fill(weights.begin(), weights.end(), 1.0 / static_cast<double>(weights.size()));
  } else {
    for (double& w : weights) {
      w /= sum;
    }
  }
  if (degenerate != nullptr) {
    *degenerate = fell_back;
  }
  return weights;
}

std::vector<double> systematic_resample(std::span<const double> particles,
                                        std::span<const double> weights, double offset) {
  const std::size_t n = particles.size();
  if (n == 0) {
    throw std::invalid_argument("systematic_resample: particle set must not be empty");
  }
  if (weights.size() != n) {
    throw std::invalid_argument("systematic_resample: weights/particles size mismatch");
  }
  const double sum = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(std::abs(sum - 1.0) <= 1e-9)) {
    throw std::invalid_argument("systematic_resample: weights must be normalized");
  }
  if (!(offset >= 0.0) || !(offset < 1.0 / static_cast<double>(n))) {
    throw std::invalid_argument("systematic_resample: offset must lie in [0, 1/N)");
  }

  std::vector<double> offspring;
  offspring.reserve(n);
  std::size_t i = 0;
  double cumulative = weights[0];
  for (std::size_t j = 0; j < n; ++j) {
    const double position = offset + static_cast<double>(j) / static_cast<double>(n);
    while (cumulative <= position && i + 1 < n) {
      ++i;
      cumulative += weights[i];
    }
    offspring.push_back(particles[i]);
  }
  return offspring;
}

ParticleFilter::ParticleFilter(double z0, int particle_count, double measurement_scale,
                               RandomSource& rng) {
  if (particle_count < 1) {
    throw std::invalid_argument("ParticleFilter: particle_count must be at least 1");
  }
  if (!(measurement_scale > 0.0)) {
    throw std::invalid_argument("ParticleFilter: measurement_scale must be positive");
  }
  const double half_width = 3.0 * measurement_scale;
  particles_.reserve(static_cast<std::size_t>(particle_count));
  for (int i = 0; i < particle_count; ++i) {
    particles_.push_back(rng.uniform(z0 - half_width, z0 + half_width));
  }
  weights_.assign(particles_.size(), 1.0 / static_cast<double>(particle_count));
}

double ParticleFilter::predict(double process_noise, RandomSource& rng) {
  double sum = 0.0;
  for (double& particle : particles_) {
    particle += rng.gaussian(process_noise);
    sum += particle;
  }
  return sum / static_cast<double>(particles_.size());
}

double ParticleFilter::correct(double z, double measurement_scale, RandomSource& rng) {
  bool degenerate = false;
  weights_ = measurement_weights(particles_, z, measurement_scale, &degenerate);
  if (degenerate) {
    ++degeneracy_count_;
  }

  double posterior = 0.0;
  for (std::size_t i = 0; i < particles_.size(); ++i) {
    posterior += weights_[i] * particles_[i];
  }

  const double offset = rng.next_unit() / static_cast<double>(particles_.size());
  particles_ = systematic_resample(particles_, weights_, offset);
  weights_.assign(particles_.size(), 1.0 / static_cast<double>(particles_.size()));
  return posterior;
}

}  // namespace fast
