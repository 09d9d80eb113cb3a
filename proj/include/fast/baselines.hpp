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

#ifndef FAST_BASELINES_HPP_
#define FAST_BASELINES_HPP_

#include <complex>
#include <vector>

#include "fast/random_source.hpp"
#include "fast/series.hpp"

namespace fast {

using SpectralVector = std::vector<std::complex<double>>;

// Per-timestamp perturbation: every value plus Laplace(0, T/total_budget).
// Fully online and the noisiest of the release strategies; the budget is
// split across all T sensitivity-1 queries.
TimeSeries lpa_release(const TimeSeries& series, double total_budget, RandomSource& rng);

// First `coefficient_count` coefficients of the length-T transform
//   F_j = sum_{i=0}^{T-1} exp(+2 pi sqrt(-1) j i / T) * x_i.
// Direct O(T * d) summation; d is small by design, and the phase index
// is reduced mod T before scaling so large j*i products keep precision.
SpectralVector dft_forward(const TimeSeries& series, int coefficient_count);

// Real part of the inverse transform of `spectrum` zero-padded to
// `length` terms: r_j = (1/length) sum_i exp(-2 pi sqrt(-1) j i / length) * y_i.
TimeSeries dft_inverse_real(const SpectralVector& spectrum, int length);

// Offline spectral baseline: keep the first coefficient_count complex
// coefficients (2 * coefficient_count real components, each perturbed
// with Laplace(0, 2 * coefficient_count / total_budget)), zero-pad, and
// invert. Needs the whole series up front, so it cannot release anything
// before the stream ends; it is the accuracy yardstick, not a streaming
// competitor.
TimeSeries dft_release(const TimeSeries& series, double total_budget,
                       int coefficient_count, RandomSource& rng);

}  // namespace fast

#endif  // FAST_BASELINES_HPP_
