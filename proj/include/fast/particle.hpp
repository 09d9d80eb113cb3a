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

#ifndef FAST_PARTICLE_HPP_
#define FAST_PARTICLE_HPP_

#include <span>
#include <vector>

#include "fast/random_source.hpp"

namespace fast {

// Normalized importance weights for particles under Laplace observation
// noise: w_i proportional to exp(-|z - x_i| / scale). Computed in log
// space with max-subtraction so distant clouds cannot underflow the whole
// vector. If the weights still degenerate to an unusable sum (non-finite
// input, for instance) the result falls back to uniform; `degenerate`
// reports that when non-null.
std::vector<double> measurement_weights(std::span<const double> particles, double z,
                                        double scale, bool* degenerate = nullptr);

// Low-variance systematic resampling: one offset u in [0, 1/N) and strides
// of 1/N pick the offspring, so each particle's copy count stays within
// one of N * weight_i. Weights must be normalized (sum within 1e-9 of 1).
std::vector<double> systematic_resample(std::span<const double> particles,
                                        std::span<const double> weights, double offset);

// Bootstrap particle filter over the same constant process model as the
// Kalman filter, but with the Laplace observation noise modeled exactly:
// the posterior is carried by a weighted particle cloud instead of a
// Gaussian, at O(N) cost per step.
class ParticleFilter {
 public:
  // Seeds the cloud uniformly on z0 +/- 3 * measurement_scale (roughly
  // 95% of the Laplace observation mass around the true value), with
  // uniform weights.
  ParticleFilter(double z0, int particle_count, double measurement_scale,
                 RandomSource& rng);

  // Moves every particle by an independent N(0, process_noise) increment
  // and returns the prior estimate, the plain cloud mean. (Weights are
  // uniform between corrections, so the plain mean is the weighted one.)
  double predict(double process_noise, RandomSource& rng);

  // Reweights the cloud against observation z, returns the posterior
  // estimate (the weighted mean), then resamples back to uniform weights.
  // Resampling after every correction keeps the cloud from collapsing
  // onto a handful of heavy particles.
  double correct(double z, double measurement_scale, RandomSource& rng);

  const std::vector<double>& particles() const { return particles_; }
  const std::vector<double>& weights() const { return weights_; }
  int size() const { return static_cast<int>(particles_.size()); }

  // Corrections that hit the uniform-weight fallback. Zero in any sane run.
  int degeneracy_count() const { return degeneracy_count_; }

 private:
  std::vector<double> particles_;
  std::vector<double> weights_;
  int degeneracy_count_ = 0;
};

}  // namespace fast

#endif  // FAST_PARTICLE_HPP_
