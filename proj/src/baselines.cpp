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

#include "fast/baselines.hpp"

#include <cstddef>
#include <stdexcept>

namespace fast {
namespace {

constexpr double kTwoPi = 6.28318530717958647692;

}  // namespace

TimeSeries lpa_release(const TimeSeries& series, double total_budget, RandomSource& rng) {
  if (series.empty()) {
    throw std::invalid_argument("lpa_release: series must not be empty");
  }
  if (!(total_budget > 0.0)) {
    throw std::invalid_argument("lpa_release: total_budget must be positive");
  }
  const double scale = static_cast<double>(series.size()) / total_budget;
  TimeSeries released;
  released.reserve(series.size());
  for (double value : series) {
    released.push_back(value + rng.laplace(scale));
  }
  return released;
}

SpectralVector dft_forward(const TimeSeries& series, int coefficient_count) {
  const int length = static_cast<int>(series.size());
  if (length < 1) {
    throw std::invalid_argument("dft_forward: series must not be empty");
  }
  if (coefficient_count < 1 || coefficient_count > length) {
    throw std::invalid_argument("dft_forward: coefficient_count must lie in [1, T]");
  }

  SpectralVector spectrum(static_cast<std::size_t>(coefficient_count));
  for (int j = 0; j < coefficient_count; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < length; ++i) {
      const long long phase_index =
          (static_cast<long long>(j) * static_cast<long long>(i)) % length;
      const double angle = kTwoPi * static_cast<double>(phase_index) / length;
      acc += series[static_cast<std::size_t>(i)] * std::polar(1.0, angle);
    }
    spectrum[static_cast<std::size_t>(j)] = acc;
  }
  return spectrum;
}

TimeSeries dft_inverse_real(const SpectralVector& spectrum, int length) {
  if (spectrum.empty()) {
    throw std::invalid_argument("dft_inverse_real: spectrum must not be empty");
  }
  if (length < static_cast<int>(spectrum.size())) {
    throw std::invalid_argument("dft_inverse_real: length must cover the spectrum");
  }

  TimeSeries series(static_cast<std::size_t>(length));
  for (int j = 0; j < length; ++j) {
    std::complex<double> acc{0.0, 0.0};
    for (int i = 0; i < static_cast<int>(spectrum.size()); ++i) {
      const long long phase_index =
          (static_cast<long long>(j) * static_cast<long long>(i)) % length;
      const double angle = -kTwoPi * static_cast<double>(phase_index) / length;
      acc += spectrum[static_cast<std::size_t>(i)] * std::polar(1.0, angle);
    }
    series[static_cast<std::size_t>(j)] = acc.real() / static_cast<double>(length);
  }
  return series;
}

TimeSeries dft_release(const TimeSeries& series, double total_budget,
                       int coefficient_count, RandomSource& rng) {
  if (!(total_budget > 0.0)) {
    throw std::invalid_argument("dft_release: total_budget must be positive");
  }
  SpectralVector spectrum = dft_forward(series, coefficient_count);
  // The kept spectrum is 2 * coefficient_count real components; the
  // budget splits evenly across them.
  const double scale = 2.0 * coefficient_count / total_budget;
  for (std::complex<double>& coefficient : spectrum) {
    // Sequenced draws: the real component's noise comes first. Building
    // the complex value inside one expression would leave the draw order
    // unspecified.
    const double real_noise = rng.laplace(scale);
    const double imaginary_noise = rng.laplace(scale);
    coefficient += std::complex<double>(real_noise, imaginary_noise);
  }
  return dft_inverse_real(spectrum, static_cast<int>(series.size()));
}

}  // namespace fast
