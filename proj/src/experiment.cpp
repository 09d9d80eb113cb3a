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

#include "fast/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "fast/baselines.hpp"
#include "fast/dataio.hpp"
#include "fast/metrics.hpp"

namespace fast {
namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

std::string fmt(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

int default_budget_samples(Method method, int series_length) {
  // The adaptive methods' sweet spot sits well below every-step sampling:
  // about 15% of the stream for the Kalman variant and 25% for the
  // particle variant.
  const double fraction = method == Method::kFastKalman ? 0.15 : 0.25;
  const int samples = static_cast<int>(std::lround(fraction * series_length));
  return std::clamp(samples, 1, series_length);
}

RunOutput run_engine_method(Method method, const TimeSeries& data, double alpha,
                            std::uint64_t seed, const MethodParams& params) {
  const int length = static_cast<int>(data.size());

  EngineConfig config;
  config.total_budget = alpha;
  config.sanitary_bound = params.sanitary_bound;
  config.seed = seed;

  switch (method) {
    case Method::kFastKalman:
    case Method::kKalmanOnly:
    case Method::kFixedKalman:
      config.filter = KalmanParams{params.process_noise, params.measurement_noise};
      break;
    default:
      config.filter = ParticleParams{params.particle_count, params.process_noise};
      break;
  }

  switch (method) {
    case Method::kFastKalman:
    case Method::kFastParticle:
      config.sampling = AdaptiveSampling{params.gains, params.theta, params.set_point};
      config.max_samples = params.budget_samples != 0
                               ? params.budget_samples
                               : default_budget_samples(method, length);
      break;
    case Method::kKalmanOnly:
    case Method::kParticleOnly:
      config.sampling = FixedSampling{1};
      config.max_samples = params.budget_samples;
      break;
    default:
      config.sampling = FixedSampling{params.fixed_interval};
      config.max_samples = params.budget_samples;
      break;
  }

  RunOutput output;
  output.log = engine_run(config, data);
  output.released = released_series(output.log);
  for (const ReleaseRecord& record : output.log) {
    if (record.sampled) {
      ++output.samples_used;
    }
  }
  return output;
}

// LPA and DFT do not run through the engine, so their logs are assembled
// to the same schema: LPA observes (and pays for) every timestamp, DFT
// pays for its spectrum coefficients rather than for timestamps.
RunOutput run_lpa(const TimeSeries& data, double alpha, std::uint64_t seed) {
  RandomSource rng(seed);
  RunOutput output;
  output.released = lpa_release(data, alpha, rng);
  const double per_step = alpha / static_cast<double>(data.size());
  output.log.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    output.log.push_back(ReleaseRecord{static_cast<std::int64_t>(k), output.released[k],
                                       true, per_step, ReleaseKind::kRawPerturbed});
  }
  output.samples_used = static_cast<int>(data.size());
  return output;
}

RunOutput run_dft(const TimeSeries& data, double alpha, int coefficients,
                  std::uint64_t seed) {
  RandomSource rng(seed);
  RunOutput output;
  output.released = dft_release(data, alpha, coefficients, rng);
  output.log.reserve(data.size());
  for (std::size_t k = 0; k < data.size(); ++k) {
    output.log.push_back(ReleaseRecord{static_cast<std::int64_t>(k), output.released[k],
                                       false, 0.0, ReleaseKind::kRawPerturbed});
  }
  output.samples_used = 2 * coefficients;
  return output;
}

std::vector<double> finite_values(const std::vector<double>& values) {
  std::vector<double> kept;
  kept.reserve(values.size());
  for (double value : values) {
    if (std::isfinite(value)) {
      kept.push_back(value);
    }
  }
  return kept;
}

// Linear-interpolation quantile on sorted data.
double quantile_sorted(const std::vector<double>& sorted, double p) {
  if (sorted.empty()) {
    return kNan;
  }
  if (sorted.size() == 1) {
    return sorted.front();
  }
  const double position = p * static_cast<double>(sorted.size() - 1);
  const std::size_t low = static_cast<std::size_t>(position);
  if (low + 1 >= sorted.size()) {
    return sorted.back();
  }
  const double weight = position - static_cast<double>(low);
  return sorted[low] + weight * (sorted[low + 1] - sorted[low]);
}

void summarize_cell(std::vector<double> values, double* median_out, double* iqr_out) {
  std::vector<double> finite = finite_values(values);
  std::sort(finite.begin(), finite.end());
  *median_out = quantile_sorted(finite, 0.5);
  *iqr_out = finite.empty() ? kNan : quantile_sorted(finite, 0.75) - quantile_sorted(finite, 0.25);
}

std::string release_log_name(Method method, double alpha, std::uint64_t seed) {
  char buffer[128];
  std::snprintf(buffer, sizeof(buffer), "%s_a%g_s%llu.csv", method_name(method).c_str(),
                alpha, static_cast<unsigned long long>(seed));
  return buffer;
}

GeneratorSpec::Kind generator_kind_from_string(const std::string& name) {
  if (name == "linear") return GeneratorSpec::Kind::kLinear;
  if (name == "logistic") return GeneratorSpec::Kind::kLogistic;
  if (name == "sinusoidal") return GeneratorSpec::Kind::kSinusoidal;
  throw std::invalid_argument("unknown dataset kind '" + name + "'");
}

std::string generator_kind_name(GeneratorSpec::Kind kind) {
  switch (kind) {
    case GeneratorSpec::Kind::kLinear:
      return "linear";
    case GeneratorSpec::Kind::kLogistic:
      return "logistic";
    case GeneratorSpec::Kind::kSinusoidal:
      return "sinusoidal";
  }
  throw std::invalid_argument("unknown dataset kind");
}

void reject_unknown_keys(const nlohmann::json& object,
                         std::initializer_list<const char*> known, const char* where) {
  for (const auto& item : object.items()) {
    bool found = false;
    for (const char* key : known) {
      if (item.key() == key) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(std::string(where) + ": unknown key '" + item.key() + "'");
    }
  }
}

}  // namespace

Method parse_method(const std::string& name) {
  if (name == "lpa") return Method::kLpa;
  if (name == "dft") return Method::kDft;
  if (name == "fast_kf") return Method::kFastKalman;
  if (name == "fast_pf") return Method::kFastParticle;
  if (name == "kf_only") return Method::kKalmanOnly;
  if (name == "pf_only") return Method::kParticleOnly;
  if (name == "fixed_kf") return Method::kFixedKalman;
  if (name == "fixed_pf") return Method::kFixedParticle;
  throw std::invalid_argument("unknown method '" + name + "'");
}

std::string method_name(Method method) {
  switch (method) {
    case Method::kLpa:
      return "lpa";
    case Method::kDft:
      return "dft";
    case Method::kFastKalman:
      return "fast_kf";
    case Method::kFastParticle:
      return "fast_pf";
    case Method::kKalmanOnly:
      return "kf_only";
    case Method::kParticleOnly:
      return "pf_only";
    case Method::kFixedKalman:
      return "fixed_kf";
    case Method::kFixedParticle:
      return "fixed_pf";
  }
  throw std::invalid_argument("unknown method");
}

TimeSeries generate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case GeneratorSpec::Kind::kLinear: {
      RandomSource rng(spec.seed);
      return gen_linear(spec.length, spec.process_noise, spec.start_value, rng);
    }
    case GeneratorSpec::Kind::kLogistic:
      return gen_logistic(spec.length, spec.amplitude);
    case GeneratorSpec::Kind::kSinusoidal:
      return gen_sinusoidal(spec.length, spec.amplitude, spec.angular_step, spec.phase);
  }
  throw std::invalid_argument("generate: unknown dataset kind");
}

RunOutput run_method(Method method, const TimeSeries& data, double alpha,
                     std::uint64_t seed, const MethodParams& params) {
  if (data.empty()) {
    throw std::invalid_argument("run_method: data must not be empty");
  }
  if (!(alpha > 0.0)) {
    throw std::invalid_argument("run_method: alpha must be positive");
  }

  RunOutput output;
  switch (method) {
    case Method::kLpa:
      output = run_lpa(data, alpha, seed);
      break;
    case Method::kDft:
      output = run_dft(data, alpha, params.dft_coefficients, seed);
      break;
    default:
      output = run_engine_method(method, data, alpha, seed, params);
      break;
  }

  if (params.clamp_nonnegative) {
    for (std::size_t k = 0; k < output.released.size(); ++k) {
      if (output.released[k] < 0.0) {
        output.released[k] = 0.0;
        output.log[k].released = 0.0;
      }
    }
  }
  return output;
}

std::vector<RunResult> run_experiment(const ExperimentPlan& plan) {
  if (plan.methods.empty()) {
    throw std::invalid_argument("run_experiment: plan has no methods");
  }
  if (plan.alphas.empty()) {
    throw std::invalid_argument("run_experiment: plan has no alphas");
  }
  if (plan.seeds.empty()) {
    throw std::invalid_argument("run_experiment: plan has no seeds");
  }
  for (double alpha : plan.alphas) {
    if (!(alpha > 0.0)) {
      throw std::invalid_argument("run_experiment: alphas must be positive");
    }
  }
  if (!(plan.f1_fraction > 0.0)) {
    throw std::invalid_argument("run_experiment: f1_fraction must be positive");
  }

  const TimeSeries data = std::holds_alternative<GeneratorSpec>(plan.dataset)
                              ? generate(std::get<GeneratorSpec>(plan.dataset))
                              : load_series_csv(std::get<std::string>(plan.dataset));

  if (!plan.release_log_dir.empty()) {
    std::filesystem::create_directories(plan.release_log_dir);
  }

  std::vector<RunResult> results;
  results.reserve(plan.methods.size() * plan.alphas.size() * plan.seeds.size());
  for (Method method : plan.methods) {
    for (double alpha : plan.alphas) {
      for (std::uint64_t seed : plan.seeds) {
        const auto start = std::chrono::steady_clock::now();
        const RunOutput output = run_method(method, data, alpha, seed, plan.params);
        const auto stop = std::chrono::steady_clock::now();

        RunResult row;
        row.method = method;
        row.alpha = alpha;
        row.seed = seed;
        row.relative_error =
            avg_relative_error(output.released, data, plan.params.sanitary_bound);
        row.l1 = l1_distance(output.released, data);
        row.f1 = f1_detection(output.released, data, plan.f1_fraction);
        row.spearman_rho = spearman(output.released, data);
        row.wall_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        row.samples_used = output.samples_used;
        results.push_back(row);

        if (!plan.release_log_dir.empty()) {
          const std::filesystem::path log_path =
              std::filesystem::path(plan.release_log_dir) /
              release_log_name(method, alpha, seed);
          save_release_csv(output.log, log_path.string(),
                           plan.emit_truth ? &data : nullptr);
        }
      }
    }
  }

  if (!plan.output_path.empty()) {
    write_text_file(plan.output_path, results_csv(results, plan.metrics));
    write_text_file(with_path_suffix(plan.output_path, "_summary"),
                    summary_csv(summarize(results), plan.metrics));
    std::filesystem::path manifest(with_path_suffix(plan.output_path, "_manifest"));
    manifest.replace_extension(".json");
    write_text_file(manifest.string(), plan_to_json(plan).dump(2) + "\n");
  }
  return results;
}

std::vector<SummaryRow> summarize(const std::vector<RunResult>& results) {
  if (results.empty()) {
    throw std::invalid_argument("summarize: results must not be empty");
  }

  std::vector<SummaryRow> rows;
  for (const RunResult& result : results) {
    bool seen = false;
    for (const SummaryRow& row : rows) {
      if (row.method == result.method && row.alpha == result.alpha) {
        seen = true;
        break;
      }
    }
    if (seen) {
      continue;
    }

    std::vector<double> relative_errors, l1s, f1s, spearmans;
    int runs = 0;
    for (const RunResult& other : results) {
      if (other.method != result.method || other.alpha != result.alpha) {
        continue;
      }
      ++runs;
      relative_errors.push_back(other.relative_error);
      l1s.push_back(other.l1);
      f1s.push_back(other.f1);
      spearmans.push_back(other.spearman_rho);
    }

    SummaryRow row;
    row.method = result.method;
    row.alpha = result.alpha;
    row.runs = runs;
    summarize_cell(relative_errors, &row.relative_error_median, &row.relative_error_iqr);
    summarize_cell(l1s, &row.l1_median, &row.l1_iqr);
    summarize_cell(f1s, &row.f1_median, &row.f1_iqr);
    summarize_cell(spearmans, &row.spearman_median, &row.spearman_iqr);
    rows.push_back(row);
  }
  return rows;
}

std::string results_csv(const std::vector<RunResult>& results,
                        const MetricSelection& metrics, bool include_timing) {
  std::ostringstream out;
  out << "method,alpha,seed";
  if (metrics.relative_error) out << ",relative_error";
  if (metrics.l1) out << ",l1";
  if (metrics.f1) out << ",f1";
  if (metrics.spearman) out << ",spearman";
  out << ",samples_used";
  if (include_timing) out << ",wall_ms";
  out << '\n';

  for (const RunResult& row : results) {
    out << method_name(row.method) << ',' << fmt(row.alpha) << ',' << row.seed;
    if (metrics.relative_error) out << ',' << fmt(row.relative_error);
    if (metrics.l1) out << ',' << fmt(row.l1);
    if (metrics.f1) out << ',' << fmt(row.f1);
    if (metrics.spearman) out << ',' << fmt(row.spearman_rho);
    out << ',' << row.samples_used;
    if (include_timing) out << ',' << fmt(row.wall_ms);
    out << '\n';
  }
  return out.str();
}

std::string summary_csv(const std::vector<SummaryRow>& rows, const MetricSelection& metrics) {
  std::ostringstream out;
  out << "method,alpha,runs";
  if (metrics.relative_error) out << ",relative_error_median,relative_error_iqr";
  if (metrics.l1) out << ",l1_median,l1_iqr";
  if (metrics.f1) out << ",f1_median,f1_iqr";
  if (metrics.spearman) out << ",spearman_median,spearman_iqr";
  out << '\n';

  for (const SummaryRow& row : rows) {
    out << method_name(row.method) << ',' << fmt(row.alpha) << ',' << row.runs;
    if (metrics.relative_error) {
      out << ',' << fmt(row.relative_error_median) << ',' << fmt(row.relative_error_iqr);
    }
    if (metrics.l1) out << ',' << fmt(row.l1_median) << ',' << fmt(row.l1_iqr);
    if (metrics.f1) out << ',' << fmt(row.f1_median) << ',' << fmt(row.f1_iqr);
    if (metrics.spearman) {
      out << ',' << fmt(row.spearman_median) << ',' << fmt(row.spearman_iqr);
    }
    out << '\n';
  }
  return out.str();
}

ExperimentPlan plan_from_json(const nlohmann::json& config) {
  if (!config.is_object()) {
    throw std::invalid_argument("plan: config must be a JSON object");
  }
  reject_unknown_keys(config,
                      {"dataset", "methods", "alphas", "seeds", "params", "metrics",
                       "f1_fraction", "emit_truth", "output", "release_log_dir"},
                      "plan");

  ExperimentPlan plan;

  if (config.contains("dataset")) {
    const nlohmann::json& dataset = config.at("dataset");
    if (!dataset.is_object()) {
      throw std::invalid_argument("plan: dataset must be an object");
    }
    if (dataset.contains("csv")) {
      reject_unknown_keys(dataset, {"csv"}, "plan.dataset");
      plan.dataset = dataset.at("csv").get<std::string>();
    } else {
      reject_unknown_keys(dataset,
                          {"kind", "length", "process_noise", "start_value", "seed",
                           "amplitude", "angular_step", "phase"},
                          "plan.dataset");
      GeneratorSpec spec;
      spec.kind = generator_kind_from_string(dataset.value("kind", std::string("linear")));
      spec.length = dataset.value("length", spec.length);
      spec.process_noise = dataset.value("process_noise", spec.process_noise);
      spec.start_value = dataset.value("start_value", spec.start_value);
      spec.seed = dataset.value("seed", spec.seed);
      spec.amplitude = dataset.value("amplitude", spec.amplitude);
      spec.angular_step = dataset.value("angular_step", spec.angular_step);
      spec.phase = dataset.value("phase", spec.phase);
      plan.dataset = spec;
    }
  }

  if (!config.contains("methods") || !config.at("methods").is_array() ||
      config.at("methods").empty()) {
    throw std::invalid_argument("plan: methods must be a non-empty array");
  }
  for (const nlohmann::json& name : config.at("methods")) {
    plan.methods.push_back(parse_method(name.get<std::string>()));
  }

  if (!config.contains("alphas") || !config.at("alphas").is_array() ||
      config.at("alphas").empty()) {
    throw std::invalid_argument("plan: alphas must be a non-empty array");
  }
  for (const nlohmann::json& alpha : config.at("alphas")) {
    plan.alphas.push_back(alpha.get<double>());
  }

  if (!config.contains("seeds") || !config.at("seeds").is_array() ||
      config.at("seeds").empty()) {
    throw std::invalid_argument("plan: seeds must be a non-empty array");
  }
  for (const nlohmann::json& seed : config.at("seeds")) {
    plan.seeds.push_back(seed.get<std::uint64_t>());
  }

  if (config.contains("params")) {
    const nlohmann::json& params = config.at("params");
    reject_unknown_keys(params,
                        {"budget_samples", "fixed_interval", "dft_coefficients",
                         "process_noise", "measurement_noise", "particle_count", "gains",
                         "integral_window", "theta", "set_point", "sanitary_bound",
                         "clamp_nonnegative"},
                        "plan.params");
    plan.params.budget_samples = params.value("budget_samples", plan.params.budget_samples);
    plan.params.fixed_interval = params.value("fixed_interval", plan.params.fixed_interval);
    plan.params.dft_coefficients =
        params.value("dft_coefficients", plan.params.dft_coefficients);
    plan.params.process_noise = params.value("process_noise", plan.params.process_noise);
    plan.params.measurement_noise =
        params.value("measurement_noise", plan.params.measurement_noise);
    plan.params.particle_count = params.value("particle_count", plan.params.particle_count);
    if (params.contains("gains")) {
      const nlohmann::json& gains = params.at("gains");
      if (!gains.is_array() || gains.size() != 3) {
        throw std::invalid_argument("plan.params: gains must be an array of 3 numbers");
      }
      plan.params.gains.proportional = gains.at(0).get<double>();
      plan.params.gains.integral = gains.at(1).get<double>();
      plan.params.gains.derivative = gains.at(2).get<double>();
    }
    plan.params.gains.integral_window =
        params.value("integral_window", plan.params.gains.integral_window);
    plan.params.theta = params.value("theta", plan.params.theta);
    plan.params.set_point = params.value("set_point", plan.params.set_point);
    plan.params.sanitary_bound = params.value("sanitary_bound", plan.params.sanitary_bound);
    plan.params.clamp_nonnegative =
        params.value("clamp_nonnegative", plan.params.clamp_nonnegative);
  }

  if (config.contains("metrics")) {
    const nlohmann::json& metrics = config.at("metrics");
    if (!metrics.is_array() || metrics.empty()) {
      throw std::invalid_argument("plan: metrics must be a non-empty array");
    }
    plan.metrics = MetricSelection{false, false, false, false};
    for (const nlohmann::json& metric : metrics) {
      const std::string name = metric.get<std::string>();
      if (name == "relative_error") {
        plan.metrics.relative_error = true;
      } else if (name == "l1") {
        plan.metrics.l1 = true;
      } else if (name == "f1") {
        plan.metrics.f1 = true;
      } else if (name == "spearman") {
        plan.metrics.spearman = true;
      } else {
        throw std::invalid_argument("plan: unknown metric '" + name + "'");
      }
    }
  }

  plan.f1_fraction = config.value("f1_fraction", plan.f1_fraction);
  plan.emit_truth = config.value("emit_truth", plan.emit_truth);
  plan.output_path = config.value("output", plan.output_path);
  plan.release_log_dir = config.value("release_log_dir", plan.release_log_dir);
  return plan;
}

nlohmann::json plan_to_json(const ExperimentPlan& plan) {
  nlohmann::json config;

  if (std::holds_alternative<GeneratorSpec>(plan.dataset)) {
    const GeneratorSpec& spec = std::get<GeneratorSpec>(plan.dataset);
    nlohmann::json dataset;
    dataset["kind"] = generator_kind_name(spec.kind);
    dataset["length"] = spec.length;
    switch (spec.kind) {
      case GeneratorSpec::Kind::kLinear:
        dataset["process_noise"] = spec.process_noise;
        dataset["start_value"] = spec.start_value;
        dataset["seed"] = spec.seed;
        break;
      case GeneratorSpec::Kind::kLogistic:
        dataset["amplitude"] = spec.amplitude;
        break;
      case GeneratorSpec::Kind::kSinusoidal:
        dataset["amplitude"] = spec.amplitude;
        dataset["angular_step"] = spec.angular_step;
        dataset["phase"] = spec.phase;
        break;
    }
    config["dataset"] = dataset;
  } else {
    config["dataset"] = nlohmann::json{{"csv", std::get<std::string>(plan.dataset)}};
  }

  nlohmann::json methods = nlohmann::json::array();
  for (Method method : plan.methods) {
    methods.push_back(method_name(method));
  }
  config["methods"] = methods;
  config["alphas"] = plan.alphas;
  config["seeds"] = plan.seeds;

  config["params"] = nlohmann::json{
      {"budget_samples", plan.params.budget_samples},
      {"fixed_interval", plan.params.fixed_interval},
      {"dft_coefficients", plan.params.dft_coefficients},
      {"process_noise", plan.params.process_noise},
      {"measurement_noise", plan.params.measurement_noise},
      {"particle_count", plan.params.particle_count},
      {"gains", {plan.params.gains.proportional, plan.params.gains.integral,
                 plan.params.gains.derivative}},
      {"integral_window", plan.params.gains.integral_window},
      {"theta", plan.params.theta},
      {"set_point", plan.params.set_point},
      {"sanitary_bound", plan.params.sanitary_bound},
      {"clamp_nonnegative", plan.params.clamp_nonnegative},
  };

  nlohmann::json metrics = nlohmann::json::array();
  if (plan.metrics.relative_error) metrics.push_back("relative_error");
  if (plan.metrics.l1) metrics.push_back("l1");
  if (plan.metrics.f1) metrics.push_back("f1");
  if (plan.metrics.spearman) metrics.push_back("spearman");
  config["metrics"] = metrics;

  config["f1_fraction"] = plan.f1_fraction;
  config["emit_truth"] = plan.emit_truth;
  config["output"] = plan.output_path;
  config["release_log_dir"] = plan.release_log_dir;
  return config;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream output(path);
  if (!output) {
    throw std::runtime_error("write_text_file: cannot open '" + path + "' for writing");
  }
  output << content;
  if (!output) {
    throw std::runtime_error("write_text_file: write to '" + path + "' failed");
  }
}

std::string with_path_suffix(const std::string& path, const std::string& suffix) {
  std::filesystem::path base(path);
  const std::string extension = base.extension().string();
  base.replace_extension();
  return base.string() + suffix + (extension.empty() ? ".csv" : extension);
}

}  // namespace fast
