// Copyright 2026 The levychaos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Experiment harness behind the command-line tool: a TOML config, the verify
// checks with their CSV rows, and the artifact writers.

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "levychaos/chaos.hpp"
#include "levychaos/lattice.hpp"
#include "levychaos/measure.hpp"

namespace levychaos {

struct ExperimentConfig {
  std::size_t dimension = 1;
  std::vector<Box> cells;
  std::vector<SpectralMeasure> measures;  // one per cell

  std::size_t degree_cut = 4;     // K
  std::size_t particle_cut = 4;   // N
  std::size_t samples = 100000;
  std::uint64_t seed = 1;
  std::size_t threads = 1;        // 0: hardware concurrency
  std::vector<std::string> checks;
  std::filesystem::path out_dir = "out";

  std::vector<std::vector<double>> test_functions;
  std::vector<double> thetas;
  std::size_t max_power = 4;
  std::vector<ChaosIndex> chaos_indices;
  std::size_t covariance_cell = 0;
  std::size_t covariance_max_degree = 3;
  std::size_t recurrence_cell = 0;
  std::size_t simulate_samples = 1000;

  MeasureField field() const;
};

/// Names accepted in `checks`.
std::span<const std::string_view> known_checks() noexcept;
bool is_verify_check(std::string_view name) noexcept;

/// Parses and validates; failures throw Error(Errc::config) with the line,
/// column and field in the message.
ExperimentConfig parse_config(std::string_view text,
                              std::string_view source_name = "config");
ExperimentConfig load_config(const std::filesystem::path& path);

struct CheckRow {
  std::string quantity;
  double target = 0.0;
  double estimate = 0.0;
  double std_error = 0.0;
  bool pass = false;
};

struct CheckResult {
  std::string name;
  std::vector<CheckRow> rows;

  bool passed() const noexcept;
};

/// CSV with header quantity,target,estimate,stderr,pass; numbers use %.17g.
std::string to_csv(const CheckResult& result);

class Experiment {
 public:
  explicit Experiment(ExperimentConfig config);

  const ExperimentConfig& config() const noexcept { return config_; }
  ExperimentConfig& config() noexcept { return config_; }

  /// One of isometry, orthogonality, moments, cf.
  CheckResult run_check(std::string_view name) const;

  /// Columns n,b_n,a_n,gamma_n for n = 0..K.
  std::string recurrence_csv(std::size_t cell) const;

  /// Columns sample_index,cell,gaussian,jump_0..jump_{R-1}.
  void write_simulation(const std::filesystem::path& path,
                        std::size_t samples) const;

  /// Runs every configured check in order, writing <out_dir>/<name>.csv for
  /// each (summary.csv for report). Returns true iff every verify check
  /// passed. An empty check list writes nothing.
  bool run(std::vector<CheckResult>* results = nullptr) const;

 private:
  std::vector<ChaosIndex> usable_indices() const;

  ExperimentConfig config_;
  MeasureField field_;
};

}  // namespace levychaos
