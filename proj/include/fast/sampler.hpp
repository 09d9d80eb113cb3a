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

#ifndef FAST_SAMPLER_HPP_
#define FAST_SAMPLER_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace fast {

// PID controller gains for the adaptive sampling interval. The three
// gains weight how much the controller reacts to the current error, the
// recent average error, and the error trend.
struct PidGains {
  double proportional = 0.9;
  double integral = 0.1;
  double derivative = 0.0;
  // How many of the most recent errors the integral term averages.
  int integral_window = 5;
};

// Gains must be non-negative, sum to 1 within 1e-9, and use a window of
// at least 1. Throws std::invalid_argument otherwise.
void validate(const PidGains& gains);

// True when timestamp k falls on the fixed sampling grid {0, I, 2I, ...}.
inline bool fixed_is_sampling_point(std::int64_t k, int interval) {
  if (interval < 1) {
    throw std::invalid_argument("fixed_is_sampling_point: interval must be at least 1");
  }
  if (k < 0) {
    throw std::invalid_argument("fixed_is_sampling_point: timestamp must be non-negative");
  }
  return k % interval == 0;
}

// Relative deviation of the corrected estimate from the prediction, the
// quantity the controller steers toward its set point. The deviation is
// taken relative to the magnitude of the estimate, floored at
// sanitary_bound so near-zero estimates cannot blow it up. Using the
// magnitude keeps the signal symmetric for series that dip below zero;
// otherwise a large, well-tracked negative level would read as permanent
// rapid change and pin the sampling interval at 1.
inline double feedback_error(double posterior, double prior, double sanitary_bound) {
  if (!(sanitary_bound > 0.0)) {
    throw std::invalid_argument("feedback_error: sanitary_bound must be positive");
  }
  const double magnitude = posterior < 0.0 ? -posterior : posterior;
  const double denominator = magnitude > sanitary_bound ? magnitude : sanitary_bound;
  const double difference = posterior - prior;
  return (difference < 0.0 ? -difference : difference) / denominator;
}

// One observed feedback error, tagged with the timestamp it was measured
// at so the derivative term can divide by real elapsed time.
struct FeedbackSample {
  std::int64_t timestamp = 0;
  double error = 0.0;
};

// Combined PID error over a feedback history (most recent sample last).
// The integral term averages the last min(window, size) errors, so early
// in a stream it works with whatever history exists; the derivative term
// is zero until two samples exist. Linear in the error values.
double pid_error(std::span<const FeedbackSample> history, const PidGains& gains);

// Next sampling interval given the current one and the controller error.
// Errors below the set point stretch the interval by up to theta steps;
// errors above it shrink the interval, saturating at theta * (1 - e)
// below. The result is rounded to the nearest step and floored at 1.
int adapt_interval(int interval, double pid_error, double theta, double set_point);

// Schedules noisy observations adaptively: after each sampled timestamp
// the filter's feedback error updates a PID controller, which stretches
// the sampling interval while the stream tracks the model and compresses
// it back toward every-step sampling when the data moves.
class AdaptiveSampler {
 public:
  AdaptiveSampler(PidGains gains, double theta, double set_point);

  // One call form per timestamp. The query form, step(k), reports whether
  // k is the scheduled sampling point and changes nothing. The feedback
  // form, step(k, error), is called after k was handled as a sampling
  // point: it folds the error into the history, adapts the interval, and
  // schedules the next point. Feedback at a non-scheduled timestamp is a
  // sequencing bug and throws std::logic_error.
  bool step(std::int64_t k, std::optional<double> feedback = std::nullopt);

  int interval() const { return interval_; }
  std::int64_t next_sample() const { return next_sample_; }
  const std::vector<FeedbackSample>& history() const { return history_; }

 private:
  PidGains gains_;
  double theta_;
  double set_point_;
  int interval_ = 1;
  std::int64_t next_sample_ = 0;
  std::vector<FeedbackSample> history_;
};

}  // namespace fast

#endif  // FAST_SAMPLER_HPP_
