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

#ifndef FAST_KALMAN_HPP_
#define FAST_KALMAN_HPP_

#include <optional>
#include <stdexcept>

namespace fast {

// Scalar Kalman filter for a constant process model with Gaussian drift,
//   x_k = x_{k-1} + w,  w ~ N(0, process_noise),
// observed through z_k = x_k + v. The actual observation noise is Laplace;
// the filter approximates it as v ~ N(0, measurement_noise), which keeps
// the posterior estimate optimal in the linear-Gaussian sense and cheap to
// run per timestamp.
class KalmanFilter {
 public:
  // Bootstraps from the first noisy observation: estimate z0 with
  // measurement-dominated uncertainty (variance defaults to
  // measurement_noise), so the next correction starts as a near
  // pass-through of the data.
  KalmanFilter(double z0, double process_noise, double measurement_noise,
               std::optional<double> initial_variance = std::nullopt)
      : estimate_(z0),
        variance_(initial_variance.value_or(measurement_noise)),
        process_noise_(process_noise),
        measurement_noise_(measurement_noise) {
    if (!(process_noise > 0.0)) {
      throw std::invalid_argument("KalmanFilter: process_noise must be positive");
    }
    if (!(measurement_noise > 0.0)) {
      throw std::invalid_argument("KalmanFilter: measurement_noise must be positive");
    }
    if (!(variance_ > 0.0)) {
      throw std::invalid_argument("KalmanFilter: initial_variance must be positive");
    }
  }

  // Projects one step ahead and returns the prior estimate. The constant
  // model keeps the estimate and widens the variance by process_noise, so
  // repeated predictions without a correction accumulate uncertainty
  // linearly, which is exactly the cost of a skipped observation.
  double predict() {
    variance_ += process_noise_;
    has_prior_ = true;
    return estimate_;
  }

  // Folds a noisy observation into the prior and returns the posterior.
  double correct(double z) {
    if (!has_prior_) {
      throw std::logic_error("KalmanFilter::correct: predict() must run first");
    }
    gain_ = variance_ / (variance_ + measurement_noise_);
    estimate_ += gain_ * (z - estimate_);
    variance_ *= 1.0 - gain_;
    has_prior_ = false;
    return estimate_;
  }

  double estimate() const { return estimate_; }

  // Prior variance after predict(), posterior variance after correct().
  double variance() const { return variance_; }

  // Most recent blending weight, in [0, 1).
  double gain() const { return gain_; }

  double process_noise() const { return process_noise_; }
  double measurement_noise() const { return measurement_noise_; }

 private:
  double estimate_;
  double variance_;
  double process_noise_;
  double measurement_noise_;
  double gain_ = 0.0;
  bool has_prior_ = false;
};

// Gaussian variance to stand in for the Laplace observation noise of a
// length-T stream released under total budget alpha. The minimum-error
// choice grows with the squared per-observation noise scale, (T/alpha)^2;
// the exact constant in front depends on the data, so it is exposed as a
// tunable factor with a neutral default.
inline double suggest_measurement_noise(int series_length, double total_budget,
                                        double scale_factor = 1.0) {
  if (series_length < 1) {
    throw std::invalid_argument("suggest_measurement_noise: series_length must be at least 1");
  }
  if (!(total_budget > 0.0)) {
    throw std::invalid_argument("suggest_measurement_noise: total_budget must be positive");
  }
  if (!(scale_factor > 0.0)) {
    throw std::invalid_argument("suggest_measurement_noise: scale_factor must be positive");
  }
  const double per_step_scale = series_length / total_budget;
  return scale_factor * per_step_scale * per_step_scale;
}

}  // namespace fast

#endif  // FAST_KALMAN_HPP_
