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

#ifndef FAST_DATAIO_HPP_
#define FAST_DATAIO_HPP_

#include <string>
#include <vector>

#include "fast/random_source.hpp"
#include "fast/release.hpp"
#include "fast/series.hpp"

namespace fast {

// Random walk: x_0 = start_value, then x_k = x_{k-1} + N(0, process_noise).
// This is exactly the process model the filters assume.
TimeSeries gen_linear(int length, double process_noise, double start_value,
                      RandomSource& rng);

// Smooth saturation: x_k = amplitude / (1 + exp(-k)).
TimeSeries gen_logistic(int length, double amplitude);

// x_k = amplitude * sin(angular_step * k + phase). Dips negative half the
// time, which exercises the sanitary bound in the relative-error metric.
TimeSeries gen_sinusoidal(int length, double amplitude, double angular_step, double phase);

// Reads a "timestamp,value" CSV. A first line whose first field is not
// numeric is treated as a header. Timestamps must be integers in strictly
// increasing order; values are taken in row order. Malformed rows are
// rejected with std::runtime_error naming the 1-based line.
TimeSeries load_series_csv(const std::string& path);

// Writes "k,value" rows with timestamps 0..T-1. Values use %.17g, enough
// digits that a load round-trips bit-exactly.
void save_series_csv(const TimeSeries& series, const std::string& path);

// Writes a release log: "k,x_k,r_k,sampled,budget_spent,kind" when truth
// is supplied, the same without the x_k column otherwise. Omitting truth
// is the default posture: the log of a private release should not carry
// the raw series next to it.
void save_release_csv(const std::vector<ReleaseRecord>& records, const std::string& path,
                      const TimeSeries* truth = nullptr);

// The released values of a log, in timestamp order.
TimeSeries released_series(const std::vector<ReleaseRecord>& records);

}  // namespace fast

#endif  // FAST_DATAIO_HPP_
