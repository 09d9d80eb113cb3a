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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fast {
namespace {

void require_same_length(const TimeSeries& released, const TimeSeries& original,
                         const char* where) {
  if (released.size() != original.size()) {
    throw std::invalid_argument(std::string(where) + ": series lengths differ");
  }
  if (released.empty()) {
    throw std::invalid_argument(std::string(where) + ": series must not be empty");
  }
}

}  // namespace

double median(TimeSeries values) {
  if (values.empty()) {
    throw std::invalid_argument("median: values must not be empty");
  }
  std::sort(values.begin(), values.end());
  const std::size_t half = values.size() / 2;
  if (values.size() % 2 == 1) {
    return values[half];
  }
  return 0.5 * (values[half - 1] + values[half]);
}

double avg_relative_error(const TimeSeries& released, const TimeSeries& original,
                          double sanitary_bound) {
  require_same_length(released, original, "avg_relative_error");
  if (!(sanitary_bound > 0.0)) {
    throw std::invalid_argument("avg_relative_error: sanitary_bound must be positive");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < original.size(); ++k) {
    sum += std::abs(released[k] - original[k]) / std::max(original[k], sanitary_bound);
  }
  return sum / static_cast<double>(original.size());
}

double l1_distance(const TimeSeries& released, const TimeSeries& original) {
  require_same_length(released, original, "l1_distance");
  double sum = 0.0;
  for (std::size_t k = 0; k < original.size(); ++k) {
    sum += std::abs(released[k] - original[k]);
  }
  return sum;
}

EventSet detect_events_with_threshold(const TimeSeries& series, double threshold) {
  if (series.size() < 2) {
    throw std::invalid_argument("detect_events: series must have at least 2 points");
  }
  EventSet events;
  events.threshold = threshold;
  for (std::size_t k = 1; k < series.size(); ++k) {
    if (series[k] - series[k - 1] > threshold) {
      events.timestamps.push_back(static_cast<std::int64_t>(k));
    }
  }
  return events;
}

EventSet detect_events(const TimeSeries& series, double median_fraction) {
  if (!(median_fraction > 0.0)) {
    throw std::invalid_argument("detect_events: median_fraction must be positive");
  }
  if (series.size() < 2) {
    throw std::invalid_argument("detect_events: series must have at least 2 points");
  }
  return detect_events_with_threshold(series, median_fraction * median(series));
}

double f1_detection(const TimeSeries& released, const TimeSeries& original,
                    double median_fraction) {
  require_same_length(released, original, "f1_detection");
  if (original.size() < 2) {
    throw std::invalid_argument("f1_detection: series must have at least 2 points");
  }
  // The detection threshold comes from the original on both sides: the
  // released series is scored on recovering the same jumps, not on its
  // own (noise-inflated) median.
  const double threshold = median_fraction * median(original);
  const EventSet truth = detect_events_with_threshold(original, threshold);
  const EventSet predicted = detect_events_with_threshold(released, threshold);

  if (truth.timestamps.empty() && predicted.timestamps.empty()) {
    return 1.0;
  }
  std::vector<std::int64_t> intersection;
  std::set_intersection(truth.timestamps.begin(), truth.timestamps.end(),
                        predicted.timestamps.begin(), predicted.timestamps.end(),
                        std::back_inserter(intersection));
  const double true_positives = static_cast<double>(intersection.size());
  if (true_positives == 0.0) {
    return 0.0;
  }
  const double precision = true_positives / static_cast<double>(predicted.timestamps.size());
  const double recall = true_positives / static_cast<double>(truth.timestamps.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<double> average_ranks(const TimeSeries& values) {
  if (values.empty()) {
    throw std::invalid_argument("average_ranks: values must not be empty");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&values](std::size_t a, std::size_t b) { return values[a] < values[b]; });

  std::vector<double> ranks(values.size());
  std::size_t start = 0;
  while (start < order.size()) {
    std::size_t stop = start + 1;
    while (stop < order.size() && values[order[stop]] == values[order[start]]) {
      ++stop;
    }
    // Positions start..stop-1 hold a run of ties; everyone in the run
    // gets the mean of the 1-based ranks the run spans.
    const double shared_rank = 0.5 * static_cast<double>(start + stop + 1);
    for (std::size_t i = start; i < stop; ++i) {
      ranks[order[i]] = shared_rank;
    }
    start = stop;
  }
  return ranks;
}

double spearman(const TimeSeries& a, const TimeSeries& b) {
  require_same_length(a, b, "spearman");
  if (a.size() < 2) {
    throw std::invalid_argument("spearman: series must have at least 2 points");
  }
  const std::vector<double> ranks_a = average_ranks(a);
  const std::vector<double> ranks_b = average_ranks(b);

  const double n = static_cast<double>(a.size());
  const double mean_a = std::accumulate(ranks_a.begin(), ranks_a.end(), 0.0) / n;
  const double mean_b = std::accumulate(ranks_b.begin(), ranks_b.end(), 0.0) / n;

  double covariance = 0.0;
  double variance_a = 0.0;
  double variance_b = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) {
    const double da = ranks_a[k] - mean_a;
    const double db = ranks_b[k] - mean_b;
    covariance += da * db;
    variance_a += da * da;
    variance_b += db * db;
  }
  if (variance_a == 0.0 || variance_b == 0.0) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return covariance / std::sqrt(variance_a * variance_b);
}

}  // namespace fast
