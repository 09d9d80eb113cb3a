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

#include "fast/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

namespace fast {

void validate(const PidGains& gains) {
  if (gains.proportional < 0.0 || gains.integral < 0.0 || gains.derivative < 0.0) {
    throw std::invalid_argument("PidGains: gains must be non-negative");
  }
  const double sum = gains.proportional + gains.integral + gains.derivative;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("PidGains: gains must sum to 1");
  }
  if (gains.integral_window < 1) {
    throw std::invalid_argument("PidGains: integral_window must be at least 1");
  }
}

double pid_error(std::span<const FeedbackSample> history, const PidGains& gains) {
  validate(gains);
  if (history.empty()) {
    throw std::invalid_argument("pid_error: history must not be empty");
  }

  const FeedbackSample& current = history.back();
  double combined = gains.proportional * current.error;

  const std::size_t window =
      std::min(static_cast<std::size_t>(gains.integral_window), history.size());
  double recent_sum = 0.0;
  for (std::size_t i = history.size() - window; i < history.size(); ++i) {
    recent_sum += history[i].error;
  }
  combined += gains.integral * recent_sum / static_cast<double>(window);

  if (history.size() >= 2) {
    const FeedbackSample& previous = history[history.size() - 2];
    const double elapsed = static_cast<double>(current.timestamp - previous.timestamp);
    if (!(elapsed > 0.0)) {
      throw std::invalid_argument("pid_error: timestamps must be strictly increasing");
    }
    combined += gains.derivative * (current.error - previous.error) / elapsed;
  }
  return combined;
}

int adapt_interval(int interval, double pid_error, double theta, double set_point) {
  if (interval < 1) {
    throw std::invalid_argument("adapt_interval: interval must be at least 1");
  }
  if (!(theta > 0.0)) {
    throw std::invalid_argument("adapt_interval: theta must be positive");
  }
  if (!(set_point > 0.0)) {
    throw std::invalid_argument("adapt_interval: set_point must be positive");
  }

  const double adjusted =
      interval + theta * (1.0 - std::exp((pid_error - set_point) / set_point));
  // Large errors push the exponential toward +inf and the adjustment to
  // -inf; anything at or below the floor (NaN included) collapses to
  // every-step sampling.
  if (!(adjusted > 1.0)) {
    return 1;
  }
  constexpr double kMaxInterval = 1e9;
  return static_cast<int>(std::lround(std::min(adjusted, kMaxInterval)));
}

AdaptiveSampler::AdaptiveSampler(PidGains gains, double theta, double set_point)
    : gains_(gains), theta_(theta), set_point_(set_point) {
  validate(gains_);
  if (!(theta > 0.0)) {
    throw std::invalid_argument("AdaptiveSampler: theta must be positive");
  }
  if (!(set_point > 0.0)) {
    throw std::invalid_argument("AdaptiveSampler: set_point must be positive");
  }
}

bool AdaptiveSampler::step(std::int64_t k, std::optional<double> feedback) {
  const bool scheduled = k == next_sample_;
  if (feedback.has_value()) {
    if (!scheduled) {
      throw std::logic_error("AdaptiveSampler: feedback outside the scheduled sampling point");
    }
    history_.push_back(FeedbackSample{k, *feedback});
    const double combined = pid_error(history_, gains_);
    interval_ = adapt_interval(interval_, combined, theta_, set_point_);
    next_sample_ = k + interval_;
  }
  return scheduled;
}

}  // namespace fast
