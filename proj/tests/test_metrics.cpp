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

#include "fast/metrics.hpp"

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

namespace fast {
namespace {

TEST(MedianTest, HandlesOddAndEvenSizes) {
  EXPECT_DOUBLE_EQ(median({3.0, 1.0, 2.0}), 2.0);
  EXPECT_DOUBLE_EQ(median({4.0, 1.0, 3.0, 2.0}), 2.5);
  EXPECT_DOUBLE_EQ(median({5.0}), 5.0);
  EXPECT_THROW(median({}), std::invalid_argument);
}

TEST(AvgRelativeErrorTest, MatchesHandComputation) {
  // |9-10|/max(10,1) = 0.1 and |1-0.5|/max(0.5,1) = 0.5.
  EXPECT_DOUBLE_EQ(avg_relative_error({9.0, 1.0}, {10.0, 0.5}), 0.3);
  EXPECT_DOUBLE_EQ(avg_relative_error({5.0, 5.0}, {5.0, 5.0}), 0.0);
}

TEST(AvgRelativeErrorTest, SanitaryBoundTamesSmallTrueValues) {
  // A negative true value would flip the denominator sign without the
  // bound; with it, the denominator is the bound itself.
  EXPECT_DOUBLE_EQ(avg_relative_error({1.0}, {-10.0}, 2.0), 5.5);
  EXPECT_DOUBLE_EQ(avg_relative_error({1.0}, {0.0}, 1.0), 1.0);
}

TEST(AvgRelativeErrorTest, RejectsBadInput) {
  EXPECT_THROW(avg_relative_error({1.0}, {1.0, 2.0}), std::invalid_argument);
  EXPECT_THROW(avg_relative_error({}, {}), std::invalid_argument);
  EXPECT_THROW(avg_relative_error({1.0}, {1.0}, 0.0), std::invalid_argument);
}

TEST(L1DistanceTest, SumsAbsoluteDeviations) {
  EXPECT_DOUBLE_EQ(l1_distance({1.0, 2.0, 3.0}, {2.0, 2.0, 1.0}), 3.0);
  EXPECT_DOUBLE_EQ(l1_distance({-1.0, -2.0}, {1.0, 2.0}), 6.0);
  EXPECT_DOUBLE_EQ(l1_distance({4.0}, {4.0}), 0.0);
  EXPECT_THROW(l1_distance({1.0}, {}), std::invalid_argument);
}

TEST(DetectEventsTest, ThresholdIsAFractionOfTheMedian) {
  // Median 150, threshold 7.5: only the +100 jump at k=2 qualifies.
  const EventSet events = detect_events({100.0, 100.0, 200.0, 200.0});
  EXPECT_EQ(events.timestamps, (std::vector<std::int64_t>{2}));
  EXPECT_DOUBLE_EQ(events.threshold, 7.5);
}

TEST(DetectEventsTest, OnlyUpwardJumpsStrictlyAboveThresholdCount) {
  const EventSet events = detect_events_with_threshold({0.0, 5.0, 0.0, 6.0}, 5.0);
  // +5 is not > 5; the -5 drop never counts; +6 does.
  EXPECT_EQ(events.timestamps, (std::vector<std::int64_t>{3}));
  EXPECT_TRUE(detect_events_with_threshold({1.0, 1.0}, 0.5).timestamps.empty());
  EXPECT_THROW(detect_events({1.0}), std::invalid_argument);
  EXPECT_THROW(detect_events({1.0, 2.0}, 0.0), std::invalid_argument);
}

TEST(F1DetectionTest, PerfectRecoveryScoresOne) {
  const TimeSeries original{10.0, 20.0, 10.0, 20.0};
  EXPECT_DOUBLE_EQ(f1_detection(original, original), 1.0);
}

TEST(F1DetectionTest, BothEmptyEventSetsScoreOne) {
  EXPECT_DOUBLE_EQ(f1_detection({5.0, 5.0, 5.0}, {7.0, 7.0, 7.0}), 1.0);
}

TEST(F1DetectionTest, NoTruePositivesScoresZero) {
  // The original is flat (no events); the release invents one.
  EXPECT_DOUBLE_EQ(f1_detection({0.0, 100.0, 0.0}, {10.0, 10.0, 10.0}), 0.0);
  // The original has an event; the release misses it.
  EXPECT_DOUBLE_EQ(f1_detection({10.0, 10.0, 10.0}, {10.0, 10.0, 100.0}), 0.0);
}

TEST(F1DetectionTest, BlendsPrecisionAndRecall) {
  // Truth events {1, 3}; release recovers only {1}: precision 1,
  // recall 0.5, F1 = 2/3.
  const TimeSeries original{10.0, 20.0, 10.0, 20.0};
  const TimeSeries released{10.0, 20.0, 20.0, 20.0};
  EXPECT_NEAR(f1_detection(released, original), 2.0 / 3.0, 1e-15);
}

TEST(F1DetectionTest, ThresholdComesFromTheOriginalOnly) {
  // Doubling the released values would double a release-derived median;
  // the score must be unchanged when the release still tracks the jumps.
  const TimeSeries original{10.0, 20.0, 10.0, 20.0};
  const TimeSeries scaled{100.0, 200.0, 100.0, 200.0};
  EXPECT_DOUBLE_EQ(f1_detection(scaled, original), 1.0);
}

TEST(AverageRanksTest, AveragesTies) {
  EXPECT_EQ(average_ranks({10.0, 20.0, 30.0}), (std::vector<double>{1.0, 2.0, 3.0}));
  EXPECT_EQ(average_ranks({5.0, 7.0, 5.0}), (std::vector<double>{1.5, 3.0, 1.5}));
  EXPECT_EQ(average_ranks({2.0, 2.0}), (std::vector<double>{1.5, 1.5}));
}

TEST(SpearmanTest, MatchesHandComputedCorrelation) {
  EXPECT_DOUBLE_EQ(spearman({1.0, 2.0, 3.0}, {1.0, 3.0, 2.0}), 0.5);
  EXPECT_DOUBLE_EQ(spearman({1.0, 2.0, 3.0}, {10.0, 20.0, 30.0}), 1.0);
  EXPECT_DOUBLE_EQ(spearman({1.0, 2.0, 3.0}, {3.0, 2.0, 1.0}), -1.0);
}

TEST(SpearmanTest, UsesAverageRanksForTies) {
  // Ranks {1.5, 1.5, 3} vs {1, 2, 3}: correlation sqrt(3)/2.
  EXPECT_NEAR(spearman({1.0, 1.0, 2.0}, {1.0, 2.0, 3.0}), std::sqrt(3.0) / 2.0, 1e-12);
}

TEST(SpearmanTest, ConstantSeriesHasNoDefinedCorrelation) {
  EXPECT_TRUE(std::isnan(spearman({5.0, 5.0, 5.0}, {1.0, 2.0, 3.0})));
  EXPECT_TRUE(std::isnan(spearman({1.0, 2.0, 3.0}, {4.0, 4.0, 4.0})));
}

TEST(SpearmanTest, IsInvariantUnderMonotoneTransforms) {
  const TimeSeries a{3.0, 1.0, 4.0, 1.5, 9.0, 2.6};
  const TimeSeries b{10.0, -2.0, 35.0, 0.0, 100.0, 5.0};
  TimeSeries squashed;
  for (double value : b) {
    squashed.push_back(std::atan(value));
  }
  EXPECT_DOUBLE_EQ(spearman(a, b), spearman(a, squashed));
}

TEST(SpearmanTest, RejectsBadInput) {
  EXPECT_THROW(spearman({1.0}, {1.0}), std::invalid_argument);
  EXPECT_THROW(spearman({1.0, 2.0}, {1.0}), std::invalid_argument);
}

}  // namespace
}  // namespace fast
