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

#include "fast/dataio.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace fast {
namespace {

std::string location(const std::string& path, int line) {
  return path + ":" + std::to_string(line) + ": ";
}

// Strips surrounding spaces and a trailing carriage return (Windows CSVs).
std::string trim(const std::string& field) {
  std::size_t begin = 0;
  std::size_t end = field.size();
  while (begin < end && (field[begin] == ' ' || field[begin] == '\t')) ++begin;
  while (end > begin &&
         (field[end - 1] == ' ' || field[end - 1] == '\t' || field[end - 1] == '\r')) {
    --end;
  }
  return field.substr(begin, end - begin);
}

bool parse_int64(const std::string& field, std::int64_t* out) {
  const std::string text = trim(field);
  if (text.empty()) return false;
  char* tail = nullptr;
  const long long value = std::strtoll(text.c_str(), &tail, 10);
  if (tail != text.c_str() + text.size()) return false;
  *out = value;
  return true;
}

bool parse_double(const std::string& field, double* out) {
  const std::string text = trim(field);
  if (text.empty()) return false;
  char* tail = nullptr;
  const double value = std::strtod(text.c_str(), &tail);
  if (tail != text.c_str() + text.size() || !std::isfinite(value)) return false;
  *out = value;
  return true;
}

std::string format_value(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

}  // namespace

TimeSeries gen_linear(int length, double process_noise, double start_value,
                      RandomSource& rng) {
  if (length < 1) {
    throw std::invalid_argument("gen_linear: length must be at least 1");
  }
  TimeSeries series;
  series.reserve(static_cast<std::size_t>(length));
  series.push_back(start_value);
  for (int k = 1; k < length; ++k) {
    series.push_back(series.back() + rng.gaussian(process_noise));
  }
  return series;
}

TimeSeries gen_logistic(int length, double amplitude) {
  if (length < 1) {
    throw std::invalid_argument("gen_logistic: length must be at least 1");
  }
  TimeSeries series;
  series.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    series.push_back(amplitude / (1.0 + std::exp(-static_cast<double>(k))));
  }
  return series;
}

TimeSeries gen_sinusoidal(int length, double amplitude, double angular_step, double phase) {
  if (length < 1) {
    throw std::invalid_argument("gen_sinusoidal: length must be at least 1");
  }
  TimeSeries series;
  series.reserve(static_cast<std::size_t>(length));
  for (int k = 0; k < length; ++k) {
    series.push_back(amplitude * std::sin(angular_step * static_cast<double>(k) + phase));
  }
  return series;
}

TimeSeries load_series_csv(const std::string& path) {
  std::ifstream input(path);
  if (!input) {
    throw std::runtime_error("load_series_csv: cannot open '" + path + "'");
  }

  TimeSeries series;
  bool have_previous = false;
  std::int64_t previous_timestamp = 0;
  int line_number = 0;
  std::string line;
  while (std::getline(input, line)) {
    ++line_number;
    if (trim(line).empty()) {
      continue;
    }
    const std::size_t comma = line.find(',');
    if (comma == std::string::npos) {
      throw std::runtime_error(location(path, line_number) +
                               "expected 'timestamp,value' with a comma separator");
    }
    const std::string first = line.substr(0, comma);
    const std::string second = line.substr(comma + 1);

    std::int64_t timestamp = 0;
    if (!parse_int64(first, &timestamp)) {
      // Only the very first line may be non-numeric, as a header.
      if (line_number == 1 && series.empty()) {
        continue;
      }
      throw std::runtime_error(location(path, line_number) +
                               "timestamp '" + trim(first) + "' is not an integer");
    }
    double value = 0.0;
    if (!parse_double(second, &value)) {
      throw std::runtime_error(location(path, line_number) +
                               "value '" + trim(second) + "' is not a finite number");
    }
    if (have_previous && timestamp <= previous_timestamp) {
      throw std::runtime_error(location(path, line_number) +
                               "timestamp " + std::to_string(timestamp) +
                               " is not strictly increasing");
    }
    previous_timestamp = timestamp;
    have_previous = true;
    series.push_back(value);
  }
  if (series.empty()) {
    throw std::runtime_error("load_series_csv: '" + path + "' has no data rows");
  }
  return series;
}

void save_series_csv(const TimeSeries& series, const std::string& path) {
  if (series.empty()) {
    throw std::invalid_argument("save_series_csv: series must not be empty");
  }
  std::ofstream output(path);
  if (!output) {
    throw std::runtime_error("save_series_csv: cannot open '" + path + "' for writing");
  }
  output << "k,value\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    output << k << ',' << format_value(series[k]) << '\n';
  }
  if (!output) {
    throw std::runtime_error("save_series_csv: write to '" + path + "' failed");
  }
}

void save_release_csv(const std::vector<ReleaseRecord>& records, const std::string& path,
                      const TimeSeries* truth) {
  if (records.empty()) {
    throw std::invalid_argument("save_release_csv: records must not be empty");
  }
  if (truth != nullptr && truth->size() != records.size()) {
    throw std::invalid_argument("save_release_csv: truth length does not match records");
  }
  std::ofstream output(path);
  if (!output) {
    throw std::runtime_error("save_release_csv: cannot open '" + path + "' for writing");
  }
  output << (truth != nullptr ? "k,x_k,r_k,sampled,budget_spent,kind\n"
                              : "k,r_k,sampled,budget_spent,kind\n");
  for (std::size_t row = 0; row < records.size(); ++row) {
    const ReleaseRecord& record = records[row];
    output << record.timestamp << ',';
    if (truth != nullptr) {
      output << format_value((*truth)[row]) << ',';
    }
    output << format_value(record.released) << ',' << (record.sampled ? 1 : 0) << ','
           << format_value(record.budget_spent) << ',' << to_string(record.kind) << '\n';
  }
  if (!output) {
    throw std::runtime_error("save_release_csv: write to '" + path + "' failed");
  }
}

TimeSeries released_series(const std::vector<ReleaseRecord>& records) {
  TimeSeries series;
  series.reserve(records.size());
  for (const ReleaseRecord& record : records) {
    series.push_back(record.released);
  }
  return series;
}

}  // namespace fast
