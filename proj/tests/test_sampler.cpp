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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "fast/random_source.hpp"

namespace fast {
namespace {

TEST(FixedSamplingTest, EveryIntervalThTimestampIsScheduled) {
  for (std::int64_t k = 0; k < 20; ++k) {
    EXPECT_TRUE(fixed_is_sampling_point(k, 1));
  }
  std::vector<std::int64_t> scheduled;
  for (std::int64_t k = 0; k < 10; ++k) {
    if (fixed_is_sampling_point(k, 3)) {
      scheduled.push_back(k);
    }
  }
  EXPECT_EQ(scheduled, (std::vector<std::int64_t>{0, 3, 6, 9}));
  EXPECT_THROW(fixed_is_sampling_point(0, 0), std::invalid_argument);
  EXPECT_THROW(fixed_is_sampling_point(-1, 2), std::invalid_argument);
}

TEST(FeedbackErrorTest, MeasuresRelativeDeviation) {
  // |9 - 12| / max(9, 1).
  EXPECT_DOUBLE_EQ(feedback_error(9.0, 12.0, 1.0), 1.0 / 3.0);
  EXPECT_DOUBLE_EQ(feedback_error(12.0, 9.0, 12.0), 0.25);
  // Posteriors of small magnitude fall back to the sanitary bound; the
  // denominator ignores the sign of the estimate.
  EXPECT_DOUBLE_EQ(feedback_error(0.5, 2.0, 1.0), 1.5);
  EXPECT_DOUBLE_EQ(feedback_error(-0.5, 2.0, 1.0), 2.5);
  EXPECT_DOUBLE_EQ(feedback_error(-5.0, 3.0, 1.0), 1.6);
  EXPECT_DOUBLE_EQ(feedback_error(7.0, 7.0, 1.0), 0.0);
  EXPECT_THROW(feedback_error(1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(PidErrorTest, BlendsProportionalAndIntegralTerms) {
  const PidGains gains{0.9, 0.1, 0.0, 5};
  std::vector<FeedbackSample> history;
  for (int i = 0; i < 5; ++i) {
    history.push_back(FeedbackSample{i, 0.1});
  }
  // A flat error history is a fixed point: 0.9 * 0.1 + 0.1 * 0.1.
  EXPECT_NEAR(pid_error(history, gains), 0.1, 1e-12);
}

TEST(PidErrorTest, DerivativeDividesByElapsedTime) {
  const PidGains gains{0.0, 0.0, 1.0, 5};
  const std::vector<FeedbackSample> history{{4, 0.1}, {6, 0.3}};
  EXPECT_NEAR(pid_error(history, gains), 0.1, 1e-12);
}

TEST(PidErrorTest, WarmsUpFromPartialHistory) {
  const PidGains gains{0.9, 0.1, 0.0, 5};
  const std::vector<FeedbackSample> single{{0, 0.2}};
  // With one sample the integral average is that sample, and the
  // derivative contributes nothing.
  EXPECT_NEAR(pid_error(single, gains), 0.2, 1e-12);

  const PidGains derivative_only{0.0, 0.0, 1.0, 5};
  EXPECT_DOUBLE_EQ(pid_error(single, derivative_only), 0.0);
}

TEST(PidErrorTest, IntegralAveragesOnlyTheWindow) {
  const PidGains gains{0.0, 1.0, 0.0, 2};
  const std::vector<FeedbackSample> history{{0, 100.0}, {1, 0.4}, {2, 0.2}};
  // Window 2 sees only the last two errors.
  EXPECT_NEAR(pid_error(history, gains), 0.3, 1e-12);
}

TEST(PidErrorTest, IsLinearInTheErrorValues) {
  const PidGains gains{0.6, 0.3, 0.1, 3};
  RandomSource rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<FeedbackSample> first;
    std::vector<FeedbackSample> second;
    std::vector<FeedbackSample> combined;
    std::int64_t timestamp = 0;
    const double a = rng.uniform(-2.0, 2.0);
    const double b = rng.uniform(-2.0, 2.0);
    for (int i = 0; i < 6; ++i) {
      timestamp += 1 + static_cast<std::int64_t>(rng.uniform(0.0, 4.0));
      const double e1 = rng.uniform(-1.0, 1.0);
      const double e2 = rng.uniform(-1.0, 1.0);
      first.push_back(FeedbackSample{timestamp, e1});
      second.push_back(FeedbackSample{timestamp, e2});
      combined.push_back(FeedbackSample{timestamp, a * e1 + b * e2});
    }
    const double expected = a * pid_error(first, gains) + b * pid_error(second, gains);
    ASSERT_NEAR(pid_error(combined, gains), expected, 1e-9);
  }
}

TEST(PidErrorTest, RejectsBadInput) {
  const PidGains gains{0.9, 0.1, 0.0, 5};
  EXPECT_THROW(pid_error({}, gains), std::invalid_argument);

  const std::vector<FeedbackSample> out_of_order{{5, 0.1}, {5, 0.2}};
  const PidGains with_derivative{0.4, 0.3, 0.3, 5};
  EXPECT_THROW(pid_error(out_of_order, with_derivative), std::invalid_argument);

  const std::vector<FeedbackSample> history{{0, 0.1}};
  EXPECT_THROW(pid_error(history, PidGains{0.5, 0.2, 0.0, 5}), std::invalid_argument);
  EXPECT_THROW(pid_error(history, PidGains{-0.1, 1.1, 0.0, 5}), std::invalid_argument);
  EXPECT_THROW(pid_error(history, PidGains{0.9, 0.1, 0.0, 0}), std::invalid_argument);
}

TEST(AdaptIntervalTest, GrowsWhenErrorSitsBelowTheSetPoint) {
  // 5 + 10 * (1 - exp(-1)) = 11.32.
  EXPECT_EQ(adapt_interval(5, 0.0, 10.0, 0.1), 11);
  // At the set point the interval is a fixed point.
  EXPECT_EQ(adapt_interval(5, 0.1, 10.0, 0.1), 5);
  EXPECT_EQ(adapt_interval(1, 0.0, 10.0, 0.1), 7);
}

TEST(AdaptIntervalTest, ShrinksToTheFloorUnderLargeErrors) {
  EXPECT_EQ(adapt_interval(5, 1.0, 10.0, 0.1), 1);
  EXPECT_EQ(adapt_interval(100, 5.0, 10.0, 0.1), 1);
  // Extreme errors overflow the exponential; the floor must still hold.
  EXPECT_EQ(adapt_interval(1000000, 1e9, 10.0, 0.1), 1);
}

TEST(AdaptIntervalTest, NeverDropsBelowOneAndShrinksWithError) {
  RandomSource rng(23);
  for (int trial = 0; trial < 1000; ++trial) {
    const int interval = 1 + static_cast<int>(rng.uniform(0.0, 100.0));
    const double theta = rng.uniform(0.1, 50.0);
    const double set_point = rng.uniform(0.01, 2.0);
    const double small = rng.uniform(0.0, 3.0);
    const double large = small + rng.uniform(0.0, 3.0);
    const int at_small = adapt_interval(interval, small, theta, set_point);
    const int at_large = adapt_interval(interval, large, theta, set_point);
    ASSERT_GE(at_small, 1);
    ASSERT_GE(at_large, 1);
    ASSERT_GE(at_small, at_large);
  }
}

TEST(AdaptIntervalTest, RejectsBadArguments) {
  EXPECT_THROW(adapt_interval(0, 0.0, 10.0, 0.1), std::invalid_argument);
  EXPECT_THROW(adapt_interval(5, 0.0, 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(adapt_interval(5, 0.0, 10.0, 0.0), std::invalid_argument);
}

TEST(AdaptiveSamplerTest, StartsAtTimestampZeroWithUnitInterval) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  EXPECT_EQ(sampler.interval(), 1);
  EXPECT_EQ(sampler.next_sample(), 0);
  EXPECT_TRUE(sampler.step(0));
}

TEST(AdaptiveSamplerTest, QueriesDoNotMutate) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  for (int repeat = 0; repeat < 5; ++repeat) {
    EXPECT_TRUE(sampler.step(0));
    EXPECT_FALSE(sampler.step(3));
    EXPECT_EQ(sampler.interval(), 1);
    EXPECT_EQ(sampler.next_sample(), 0);
  }
  EXPECT_TRUE(sampler.history().empty());
}

TEST(AdaptiveSamplerTest, FeedbackAdvancesTheSchedule) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  EXPECT_TRUE(sampler.step(0, 0.0));
  // Zero error stretches 1 to 1 + 10 * (1 - exp(-1)) = 7.32 -> 7.
  EXPECT_EQ(sampler.interval(), 7);
  EXPECT_EQ(sampler.next_sample(), 7);
  EXPECT_FALSE(sampler.step(1));
  EXPECT_FALSE(sampler.step(6));
  EXPECT_TRUE(sampler.step(7));
  ASSERT_EQ(sampler.history().size(), 1u);
  EXPECT_EQ(sampler.history()[0].timestamp, 0);
}

TEST(AdaptiveSamplerTest, CalmStreamsStretchTheInterval) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  std::int64_t k = 0;
  int previous_interval = 0;
  for (int round = 0; round < 6; ++round) {
    EXPECT_TRUE(sampler.step(k, 0.0));
    EXPECT_GT(sampler.interval(), previous_interval);
    previous_interval = sampler.interval();
    k = sampler.next_sample();
  }
}

TEST(AdaptiveSamplerTest, VolatileStreamsCollapseToEveryStep) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  std::int64_t k = 0;
  for (int round = 0; round < 4; ++round) {
    sampler.step(k, 0.0);
    k = sampler.next_sample();
  }
  EXPECT_GT(sampler.interval(), 10);
  sampler.step(k, 50.0);
  EXPECT_EQ(sampler.interval(), 1);
  EXPECT_EQ(sampler.next_sample(), k + 1);
}

TEST(AdaptiveSamplerTest, FeedbackOffScheduleIsASequencingBug) {
  AdaptiveSampler sampler(PidGains{}, 10.0, 0.1);
  EXPECT_THROW(sampler.step(3, 0.5), std::logic_error);
  sampler.step(0, 0.0);
  EXPECT_THROW(sampler.step(sampler.next_sample() + 1, 0.5), std::logic_error);
}

TEST(AdaptiveSamplerTest, RejectsBadConstruction) {
  EXPECT_THROW(AdaptiveSampler(PidGains{0.5, 0.1, 0.0, 5}, 10.0, 0.1),
               std::invalid_argument);
  EXPECT_THROW(AdaptiveSampler(PidGains{}, 0.0, 0.1), std::invalid_argument);
  EXPECT_THROW(AdaptiveSampler(PidGains{}, 10.0, -0.1), std::invalid_argument);
}

}  // namespace
}  // namespace fast
