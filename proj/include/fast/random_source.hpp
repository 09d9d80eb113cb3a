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

#ifndef FAST_RANDOM_SOURCE_HPP_
#define FAST_RANDOM_SOURCE_HPP_

#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>

namespace fast {

// Seeded randomness for every stochastic component in the library.
//
// One instance drives one run; replaying a run with the same seed replays
// the exact draw sequence. Parallel or repeated runs derive independent
// instances with for_run(). The transforms below are fixed (inverse CDF
// for Laplace, Box-Muller for Gaussian) so the draw count per call is part
// of the contract: 1 engine word per uniform or Laplace deviate, 2 per
// Gaussian deviate.
//
// The engine is std::mt19937_64: deterministic, statistically solid, and
// NOT cryptographic. Noise from this source is suitable for simulation and
// evaluation; a deployment that hands released values to an actual
// adversary needs a hardened entropy source in its place. See README.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  static RandomSource for_run(std::uint64_t base_seed, std::uint64_t run_index) {
    return RandomSource(base_seed + run_index);
  }

  std::uint64_t seed() const { return seed_; }

  // Uniform on the open interval (0, 1): the top 53 bits of one engine
  // word, centered half a step away from both endpoints so downstream
  // logs never see 0 or 1.
  double next_unit() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double low, double high) {
    if (!(low < high)) {
      throw std::invalid_argument("RandomSource::uniform: low must be below high");
    }
    return low + (high - low) * next_unit();
  }

  // One draw from Laplace(0, scale) by inverse CDF. A single uniform
  // supplies both the sign and the exponential magnitude.
  double laplace(double scale) {
    if (!(scale > 0.0)) {
      throw std::invalid_argument("RandomSource::laplace: scale must be positive");
    }
    const double u = next_unit();
    return u < 0.5 ? scale * std::log(2.0 * u) : -scale * std::log(2.0 * (1.0 - u));
  }

  // One draw from N(0, variance) via Box-Muller, consuming two uniforms.
  // No caching of the second deviate; draw counts stay predictable.
  double gaussian(double variance) {
    if (!(variance > 0.0)) {
      throw std::invalid_argument("RandomSource::gaussian: variance must be positive");
    }
    const double u1 = next_unit();
    const double u2 = next_unit();
    return std::sqrt(-2.0 * variance * std::log(u1)) * std::cos(2.0 * kPi * u2);
  }

 private:
  static constexpr double kPi = 3.14159265358979323846;

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

// Density of Laplace(0, scale) at x.
inline double laplace_density(double x, double scale) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("laplace_density: scale must be positive");
  }
  return std::exp(-std::abs(x) / scale) / (2.0 * scale);
}

}  // namespace fast

#endif  // FAST_RANDOM_SOURCE_HPP_
