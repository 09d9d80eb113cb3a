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

#ifndef FAST_METRICS_HPP_
#define FAST_METRICS_HPP_

#include <cstdint>
#include <vector>

#include "fast/series.hpp"

namespace fast {

// Median of `values` (the midpoint average for even sizes). Takes a copy
// because it sorts.
double median(TimeSeries values);

// Mean over timestamps of |released - original| / max(original, bound).
// The bound keeps near-zero (or negative) true values from dominating.
double avg_relative_error(const TimeSeries& released, const TimeSeries& original,
                          double sanitary_bound = 1.0);

// Sum over timestamps of |released - original|.
double l1_distance(const TimeSeries& released, const TimeSeries& original);

// Timestamps k >= 1 where the series jumps by more than `threshold`
// relative to the previous value, in increasing order.
struct EventSet {
  std::vector<std::int64_t> timestamps;
  double threshold = 0.0;
};

// Events against a threshold of median_fraction * median(series).
EventSet detect_events(const TimeSeries& series, double median_fraction = 0.05);

// Events against an explicit threshold; used to score a released series
// with the threshold calibrated on the original.
EventSet detect_events_with_threshold(const TimeSeries& series, double threshold);

// F1 score of event detection on the released series against events in
// the original, both thresholded from the original's median. Two empty
// event sets score a perfect 1; no true positives otherwise scores 0.
double f1_detection(const TimeSeries& released, const TimeSeries& original,
                    double median_fraction = 0.05);

// Ranks with ties averaged (so tied values share the mean of the ranks
// they occupy), 1-based.
std::vector<double> average_ranks(const TimeSeries& values);

// Spearman rank correlation: Pearson correlation of the averaged ranks.
// Returns NaN when either side has zero rank variance (constant series),
// where the correlation is undefined.
double spearman(const TimeSeries& a, const TimeSeries& b);

}  // namespace fast

#endif  // FAST_METRICS_HPP_
