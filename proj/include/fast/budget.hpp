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

#ifndef FAST_BUDGET_HPP_
#define FAST_BUDGET_HPP_

#include <optional>
#include <stdexcept>

namespace fast {

// Tracks the privacy budget of one release stream.
//
// The total budget is pre-partitioned evenly across at most `max_samples`
// noisy observations, so every observation charges total/max and draws
// Laplace noise with scale max/total (count queries have sensitivity 1).
// Charges past the limit are refused, never negotiated: the caller treats
// an exhausted ledger as "stop observing", which is a normal outcome for
// an adaptive sampler, not an error.
class BudgetLedger {
 public:
  BudgetLedger(double total_budget, int max_samples)
      : total_budget_(total_budget), max_samples_(max_samples) {
    if (!(total_budget > 0.0)) {
      throw std::invalid_argument("BudgetLedger: total_budget must be positive");
    }
    if (max_samples < 1) {
      throw std::invalid_argument("BudgetLedger: max_samples must be at least 1");
    }
  }

  // Spends one per-sample share. Returns the amount charged, or nullopt
  // once all max_samples shares are gone.
  std::optional<double> charge() {
    if (samples_used_ >= max_samples_) {
      return std::nullopt;
    }
    ++samples_used_;
    return per_sample_budget();
  }

  bool exhausted() const { return samples_used_ >= max_samples_; }
  int samples_used() const { return samples_used_; }
  int max_samples() const { return max_samples_; }
  double total_budget() const { return total_budget_; }
  double per_sample_budget() const { return total_budget_ / max_samples_; }

  // Laplace scale for one noisy observation of a sensitivity-1 query.
  double per_sample_scale() const { return max_samples_ / total_budget_; }

  // Computed as (used / max) * total rather than used * (total / max):
  // the fraction never exceeds 1, so spent() <= total_budget() holds in
  // floating point too, and full exhaustion lands exactly on the total.
  double spent() const {
    return static_cast<double>(samples_used_) / max_samples_ * total_budget_;
  }
  double remaining() const { return total_budget_ - spent(); }

 private:
  double total_budget_;
  int max_samples_;
  int samples_used_ = 0;
};

}  // namespace fast

#endif  // FAST_BUDGET_HPP_
