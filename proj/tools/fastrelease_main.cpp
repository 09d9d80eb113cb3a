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
//
// Command-line front end.
//
//   fastrelease gen   --dataset linear --length 1000 --seed 7 --output data.csv
//   fastrelease run   --method fast_kf --input data.csv --alpha 1 --output log.csv
//   fastrelease sweep --plan plan.json
//
// `gen` writes a synthetic series, `run` releases one series with one
// strategy and prints its utility metrics, `sweep` executes a JSON plan
// over methods x budgets x seeds and writes results/summary/manifest.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <fstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fast/dataio.hpp"
#include "fast/experiment.hpp"
#include "fast/metrics.hpp"

namespace {

struct GenOptions {
  std::string dataset = "linear";
  int length = 1000;
  double process_noise = 1e5;
  double start_value = 1000.0;
  double amplitude = 5000.0;
  double angular_step = 0.52359877559829887;
  double phase = 1.5707963267948966;
  std::uint64_t seed = 0;
  std::string output;
};

struct RunOptions {
  std::string method;
  std::string input;
  GenOptions synthetic;
  double alpha = 1.0;
  std::uint64_t seed = 0;
  fast::MethodParams params;
  std::vector<double> gains;
  double f1_fraction = 0.05;
  bool emit_truth = false;
  std::string output;
};

fast::GeneratorSpec to_generator_spec(const GenOptions& options) {
  fast::GeneratorSpec spec;
  if (options.dataset == "linear") {
    spec.kind = fast::GeneratorSpec::Kind::kLinear;
  } else if (options.dataset == "logistic") {
    spec.kind = fast::GeneratorSpec::Kind::kLogistic;
  } else if (options.dataset == "sinusoidal") {
    spec.kind = fast::GeneratorSpec::Kind::kSinusoidal;
  } else {
    throw CLI::ValidationError("--dataset", "must be linear, logistic, or sinusoidal");
  }
  spec.length = options.length;
  spec.process_noise = options.process_noise;
  spec.start_value = options.start_value;
  spec.amplitude = options.amplitude;
  spec.angular_step = options.angular_step;
  spec.phase = options.phase;
  spec.seed = options.seed;
  return spec;
}

void add_dataset_flags(CLI::App* command, GenOptions* options) {
  command->add_option("--dataset", options->dataset,
                      "Synthetic dataset: linear, logistic, or sinusoidal");
  command->add_option("--length", options->length, "Series length T")
      ->check(CLI::PositiveNumber);
  command->add_option("--gen-process-noise", options->process_noise,
                      "Random-walk step variance (linear dataset)");
  command->add_option("--x0", options->start_value, "Start value (linear dataset)");
  command->add_option("--amplitude", options->amplitude,
                      "Amplitude (logistic and sinusoidal datasets)");
  command->add_option("--angular-step", options->angular_step,
                      "Angular step per timestamp (sinusoidal dataset)");
  command->add_option("--phase", options->phase, "Phase offset (sinusoidal dataset)");
  command->add_option("--data-seed", options->seed, "Generator seed (linear dataset)");
}

void add_method_flags(CLI::App* command, RunOptions* options) {
  command
      ->add_option("--method", options->method,
                   "lpa, dft, fast_kf, fast_pf, kf_only, pf_only, fixed_kf, fixed_pf")
      ->required();
  command->add_option("--alpha", options->alpha, "Total privacy budget")
      ->check(CLI::PositiveNumber);
  command->add_option("--seed", options->seed, "Mechanism seed");
  command->add_option("--budget-samples", options->params.budget_samples,
                      "Cap M on noisy observations (0 = method default)");
  command->add_option("--interval", options->params.fixed_interval,
                      "Sampling interval I for fixed_kf / fixed_pf")
      ->check(CLI::PositiveNumber);
  command->add_option("--dft-coefficients", options->params.dft_coefficients,
                      "Retained spectrum size d for dft")
      ->check(CLI::PositiveNumber);
  command->add_option("--process-noise", options->params.process_noise,
                      "Filter process noise Q");
  command->add_option("--measurement-noise", options->params.measurement_noise,
                      "Kalman measurement noise R");
  command->add_option("--particles", options->params.particle_count,
                      "Particle count N for the particle filter")
      ->check(CLI::PositiveNumber);
  command
      ->add_option("--gains", options->gains,
                   "PID gains: proportional integral derivative")
      ->expected(3);
  command->add_option("--integral-window", options->params.gains.integral_window,
                      "Errors averaged by the integral term")
      ->check(CLI::PositiveNumber);
  command->add_option("--theta", options->params.theta, "Interval adjustment magnitude");
  command->add_option("--xi", options->params.set_point, "Controller set point");
  command->add_option("--delta", options->params.sanitary_bound,
                      "Relative-error denominator floor");
  command->add_option("--f1-fraction", options->f1_fraction,
                      "Event threshold as a fraction of the data median");
  command->add_flag("--clamp-nonnegative", options->params.clamp_nonnegative,
                    "Clamp released values at zero (post-processing)");
  command->add_flag("--emit-truth", options->emit_truth,
                    "Include the raw series in release logs (testing only)");
}

int do_gen(const GenOptions& options) {
  const fast::TimeSeries series = fast::generate(to_generator_spec(options));
  fast::save_series_csv(series, options.output);
  std::printf("wrote %zu points to %s\n", series.size(), options.output.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Differentially private release of aggregate time series"};
  app.require_subcommand(1);

  GenOptions gen_options;
  CLI::App* gen = app.add_subcommand("gen", "Write a synthetic series to CSV");
  add_dataset_flags(gen, &gen_options);
  gen->add_option("--output", gen_options.output, "Destination CSV")->required();

  RunOptions run_options;
  CLI::App* run = app.add_subcommand("run", "Release one series with one strategy");
  run->add_option("--input", run_options.input, "Input series CSV (timestamp,value)");
  add_dataset_flags(run, &run_options.synthetic);
  add_method_flags(run, &run_options);
  run->add_option("--output", run_options.output, "Release log CSV destination");

  std::string plan_path;
  std::string sweep_output_override;
  CLI::App* sweep = app.add_subcommand("sweep", "Execute a JSON experiment plan");
  sweep->add_option("--plan", plan_path, "Plan JSON path")->required();
  sweep->add_option("--output", sweep_output_override,
                    "Results CSV path (overrides the plan's output)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed()) {
      return do_gen(gen_options);
    }

    if (run->parsed()) {
      if (!run_options.gains.empty()) {
        run_options.params.gains.proportional = run_options.gains[0];
        run_options.params.gains.integral = run_options.gains[1];
        run_options.params.gains.derivative = run_options.gains[2];
      }
      const fast::TimeSeries data =
          !run_options.input.empty()
              ? fast::load_series_csv(run_options.input)
              : fast::generate(to_generator_spec(run_options.synthetic));

      const fast::Method method = fast::parse_method(run_options.method);
      const fast::RunOutput output = fast::run_method(
          method, data, run_options.alpha, run_options.seed, run_options.params);

      if (!run_options.output.empty()) {
        fast::save_release_csv(output.log, run_options.output,
                               run_options.emit_truth ? &data : nullptr);
      }

      std::printf("method=%s alpha=%g seed=%llu\n", run_options.method.c_str(),
                  run_options.alpha,
                  static_cast<unsigned long long>(run_options.seed));
      std::printf("relative_error=%.6g\n",
                  fast::avg_relative_error(output.released, data,
                                           run_options.params.sanitary_bound));
      std::printf("l1=%.6g\n", fast::l1_distance(output.released, data));
      std::printf("f1=%.6g\n",
                  fast::f1_detection(output.released, data, run_options.f1_fraction));
      std::printf("spearman=%.6g\n", fast::spearman(output.released, data));
      std::printf("samples_used=%d\n", output.samples_used);
      return 0;
    }

    // sweep
    std::ifstream plan_file(plan_path);
    if (!plan_file) {
      std::fprintf(stderr, "error: cannot open plan '%s'\n", plan_path.c_str());
      return 1;
    }
    nlohmann::json config;
    plan_file >> config;
    fast::ExperimentPlan plan = fast::plan_from_json(config);
    if (!sweep_output_override.empty()) {
      plan.output_path = sweep_output_override;
    }
    const std::vector<fast::RunResult> results = fast::run_experiment(plan);
    const std::string table = fast::summary_csv(fast::summarize(results), plan.metrics);
    std::fputs(table.c_str(), stdout);
    if (!plan.output_path.empty()) {
      std::printf("wrote %zu rows to %s\n", results.size(), plan.output_path.c_str());
    }
    return 0;
  } catch (const std::exception& error) {
    std::fprintf(stderr, "error: %s\n", error.what());
    return 1;
  }
}
