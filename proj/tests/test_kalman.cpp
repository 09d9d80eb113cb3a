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

#include "fast/kalman.hpp"

#include <gtest/gtest.h>

#include "fast/random_source.hpp"

namespace fast {
namespace {

TEST(KalmanFilterTest, BootstrapsFromFirstObservation) {
  KalmanFilter filter(123.5, 1e5, 1e6);
  EXPECT_DOUBLE_EQ(filter.estimate(), 123.5);
  EXPECT_DOUBLE_EQ(filter.variance(), 1e6);
}

TEST(KalmanFilterTest, PredictKeepsEstimateAndWidensVariance) {
  KalmanFilter filter(50.0, 1e5, 1e6);
  const double prior = filter.predict();
  EXPECT_DOUBLE_EQ(prior, 50.0);
  EXPECT_DOUBLE_EQ(filter.variance(), 1e6 + 1e5);
}

TEST(KalmanFilterTest, SkippedCorrectionsAccumulateVarianceLinearly) {
  KalmanFilter filter(50.0, 1e5, 1e6);
  for (int t = 1; t <= 10; ++t) {
    EXPECT_DOUBLE_EQ(filter.predict(), 50.0);
    EXPECT_DOUBLE_EQ(filter.variance(), 1e6 + t * 1e5);
  }
}

TEST(KalmanFilterTest, GainMatchesVarianceRatio) {
  // Prior variance 1e5 against measurement noise 1e6 blends at 1/11.
  KalmanFilter filter(0.0, 1.0, 1e6, 1e5 - 1.0);
  filter.predict();
  ASSERT_DOUBLE_EQ(filter.variance(), 1e5);
  filter.correct(11.0);
  EXPECT_DOUBLE_EQ(filter.gain(), 1.0 / 11.0);
  EXPECT_DOUBLE_EQ(filter.estimate(), 1.0);
}

TEST(KalmanFilterTest, EqualVariancesBlendHalfway) {
  KalmanFilter filter(0.0, 1e5, 1e6, 1e6 - 1e5);
  filter.predict();
  ASSERT_DOUBLE_EQ(filter.variance(), 1e6);
  filter.correct(10.0);
  EXPECT_DOUBLE_EQ(filter.gain(), 0.5);
  EXPECT_DOUBLE_EQ(filter.estimate(), 5.0);
}

TEST(KalmanFilterTest, CorrectionContractsVariance) {
  KalmanFilter filter(0.0, 1e5, 1e6);
  const double before = filter.variance();
  filter.predict();
  const double prior_variance = filter.variance();
  EXPECT_GT(prior_variance, before);
  filter.correct(42.0);
  // Posterior variance is (1 - K) of the prior.
  EXPECT_DOUBLE_EQ(filter.variance(), (1.0 - filter.gain()) * prior_variance);
  EXPECT_LT(filter.variance(), prior_variance);
}

TEST(KalmanFilterTest, InvariantsHoldOverRandomRuns) {
  RandomSource rng(7);
  KalmanFilter filter(rng.uniform(-100.0, 100.0), 2.0, 5.0);
  for (int step = 0; step < 1000; ++step) {
    const double prior = filter.predict();
    const double z = rng.uniform(-200.0, 200.0);
    const double posterior = filter.correct(z);
    ASSERT_GE(filter.gain(), 0.0);
    ASSERT_LT(filter.gain(), 1.0);
    ASSERT_GT(filter.variance(), 0.0);
    // The posterior lies between the prior estimate and the observation.
    const double low = prior < z ? prior : z;
    const double high = prior < z ? z : prior;
    ASSERT_GE(posterior, low);
    ASSERT_LE(posterior, high);
  }
}

TEST(KalmanFilterTest, CorrectWithoutPredictIsASequencingBug) {
  KalmanFilter filter(0.0, 1.0, 1.0);
  EXPECT_THROW(filter.correct(1.0), std::logic_error);
  filter.predict();
  filter.correct(1.0);
  EXPECT_THROW(filter.correct(1.0), std::logic_error);
}

TEST(KalmanFilterTest, RejectsNonPositiveNoise) {
  EXPECT_THROW(KalmanFilter(0.0, 0.0, 1.0), std::invalid_argument);
  EXPECT_THROW(KalmanFilter(0.0, 1.0, 0.0), std::invalid_argument);
  EXPECT_THROW(KalmanFilter(0.0, -1.0, 1.0), std::invalid_argument);
  EXPECT_THROW(KalmanFilter(0.0, 1.0, -1.0), std::invalid_argument);
  EXPECT_THROW(KalmanFilter(0.0, 1.0, 1.0, 0.0), std::invalid_argument);
}

TEST(SuggestMeasurementNoiseTest, MatchesKnownOperatingPoints) {
  EXPECT_EQ(suggest_measurement_noise(1000, 1.0), 1e6);
  EXPECT_EQ(suggest_measurement_noise(1000, 0.1), 1e8);
  EXPECT_EQ(suggest_measurement_noise(100, 1.0), 1e4);
}

TEST(SuggestMeasurementNoiseTest, ScalesWithSquaredNoiseScale) {
  // Halving the budget quadruples the suggestion; doubling the length
  // does the same.
  const double base = suggest_measurement_noise(500, 2.0);
  EXPECT_NEAR(suggest_measurement_noise(500, 1.0) / base, 4.0, 1e-12);
  EXPECT_NEAR(suggest_measurement_noise(1000, 2.0) / base, 4.0, 1e-12);
  EXPECT_DOUBLE_EQ(suggest_measurement_noise(500, 2.0, 3.0), 3.0 * base);
}

TEST(SuggestMeasurementNoiseTest, RejectsBadArguments) {
  EXPECT_THROW(suggest_measurement_noise(0, 1.0), std::invalid_argument);
  EXPECT_THROW(suggest_measurement_noise(100, 0.0), std::invalid_argument);
  EXPECT_THROW(suggest_measurement_noise(100, 1.0, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace fast
