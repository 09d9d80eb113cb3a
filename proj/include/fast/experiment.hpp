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

#ifndef FAST_EXPERIMENT_HPP_
#define FAST_EXPERIMENT_HPP_

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "fast/engine.hpp"
#include "fast/release.hpp"
#include "fast/sampler.hpp"
#include "fast/series.hpp"

namespace fast {

// Release strategies the harness can compare.
//   kLpa:            per-timestamp perturbation of every value.
//   kDft:            offline spectral perturbation.
//   kFastKalman:     Kalman filtering + adaptive sampling.
//   kFastParticle:   particle filtering + adaptive sampling.
//   kKalmanOnly:     Kalman filtering, observation at every timestamp.
//   kParticleOnly:   particle filtering, observation at every timestamp.
//   kFixedKalman:    Kalman filtering, observation every I-th timestamp.
//   kFixedParticle:  particle filtering, observation every I-th timestamp.
enum class Method {
  kLpa,
  kDft,
  kFastKalman,
  kFastParticle,
  kKalmanOnly,
  kParticleOnly,
  kFixedKalman,
  kFixedParticle,
};

Method parse_method(const std::string& name);
std::string method_name(Method method);

// Synthetic dataset description. Only the fields relevant to `kind` are
// read; the defaults reproduce the standard evaluation series.
struct GeneratorSpec {
  enum class Kind { kLinear, kLogistic, kSinusoidal };

  Kind kind = Kind::kLinear;
  int length = 1000;
  // Linear (random walk) parameters.
  double process_noise = 1e5;
  double start_value = 1000.0;
  std::uint64_t seed = 0;
  // Logistic and sinusoidal amplitude.
  double amplitude = 5000.0;
  // Sinusoidal shape: amplitude * sin(angular_step * k + phase).
  double angular_step = 0.52359877559829887;
  double phase = 1.5707963267948966;
};

TimeSeries generate(const GeneratorSpec& spec);

// Method knobs shared by every run in a plan. Zeros mean "derive":
// budget_samples defaults to 15% of T for kFastKalman and 25% of T for
// kFastParticle, and to the full sampling schedule for the fixed-rate
// methods.
struct MethodParams {
  int budget_samples = 0;
  int fixed_interval = 1;
  int dft_coefficients = 20;
  double process_noise = 1e5;
  double measurement_noise = 1e6;
  int particle_count = 1000;
  PidGains gains{};
  double theta = 10.0;
  double set_point = 0.1;
  double sanitary_bound = 1.0;
  // Post-processing only: clamp released values at zero before metrics
  // and logs. Never applied inside the engine.
  bool clamp_nonnegative = false;
};

struct MetricSelection {
  bool relative_error = true;
  bool l1 = true;
  bool f1 = true;
  bool spearman = true;
};

struct ExperimentPlan {
  std::variant<GeneratorSpec, std::string> dataset = GeneratorSpec{};
  std::vector<Method> methods;
  std::vector<double> alphas;
  std::vector<std::uint64_t> seeds;
  MethodParams params{};
  MetricSelection metrics{};
  double f1_fraction = 0.05;
  // Write the raw series alongside releases in per-run logs. Off by
  // default: a release log should be publishable on its own.
  bool emit_truth = false;
  // Results CSV path; empty writes nothing. The summary table and the
  // JSON manifest land next to it with _summary.csv / _manifest.json.
  std::string output_path;
  // When non-empty, one release-log CSV per run lands here.
  std::string release_log_dir;
};

// One strategy applied once to one dataset.
struct RunOutput {
  TimeSeries released;
  std::vector<ReleaseRecord> log;
  int samples_used = 0;
};

RunOutput run_method(Method method, const TimeSeries& data, double alpha,
                     std::uint64_t seed, const MethodParams& params);

// One row of the results table.
struct RunResult {
  Method method = Method::kLpa;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  double relative_error = 0.0;
  double l1 = 0.0;
  double f1 = 0.0;
  double spearman_rho = 0.0;
  double wall_ms = 0.0;
  int samples_used = 0;
};

// Runs every (method, alpha, seed) combination against one dataset,
// generated or loaded exactly once. Sequential and deterministic apart
// from the wall_ms column. Also writes the plan's output files when
// paths are set.
std::vector<RunResult> run_experiment(const ExperimentPlan& plan);

// Median and interquartile range per (method, alpha) group, in first-seen
// order. NaN metric values (undefined correlations) are dropped per cell.
struct SummaryRow {
  Method method = Method::kLpa;
  double alpha = 1.0;
  int runs = 0;
  double relative_error_median = 0.0, relative_error_iqr = 0.0;
  double l1_median = 0.0, l1_iqr = 0.0;
  double f1_median = 0.0, f1_iqr = 0.0;
  double spearman_median = 0.0, spearman_iqr = 0.0;
};

std::vector<SummaryRow> summarize(const std::vector<RunResult>& results);

// CSV renderings. Timing is the one nondeterministic column, so it can be
// excluded when comparing tables across runs.
std::string results_csv(const std::vector<RunResult>& results,
                        const MetricSelection& metrics, bool include_timing = true);
std::string summary_csv(const std::vector<SummaryRow>& rows, const MetricSelection& metrics);

// Plan <-> JSON, for sweep configs on the way in and run manifests on the
// way out. Unknown keys are rejected; missing keys take the defaults
// above.
ExperimentPlan plan_from_json(const nlohmann::json& config);
nlohmann::json plan_to_json(const ExperimentPlan& plan);

void write_text_file(const std::string& path, const std::string& content);

// Inserts a suffix before the extension: ("r.csv", "_summary") -> "r_summary.csv".
std::string with_path_suffix(const std::string& path, const std::string& suffix);

}  // namespace fast

#endif  // FAST_EXPERIMENT_HPP_
