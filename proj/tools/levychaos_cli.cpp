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

// levychaos command-line tool. Links only the C interface.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 usage, config or
// runtime error.

#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "levychaos/levychaos.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitError = 2;

struct Options {
  std::string config;
  std::uint64_t seed = 0;
  std::uint64_t samples = 0;
  std::string out_dir;
  std::uint32_t threads = 0;
  bool seed_set = false;
  bool samples_set = false;
  bool threads_set = false;
};

int report_error(lc_status status) {
  std::fprintf(stderr, "levychaos: %s: %s\n", lc_status_name(status),
               lc_last_error_message());
  return kExitError;
}

// Owns an experiment handle for the duration of one command.
class Session {
 public:
  ~Session() { lc_experiment_free(handle_); }

  lc_status open(const Options& opt) {
    lc_status s = lc_experiment_load_file(opt.config.c_str(), &handle_);
    if (s != LC_OK) return s;
    if (opt.seed_set && (s = lc_experiment_set_seed(handle_, opt.seed)) != LC_OK) return s;
    if (opt.samples_set &&
        (s = lc_experiment_set_samples(handle_, opt.samples)) != LC_OK) {
      return s;
    }
    if (opt.threads_set &&
        (s = lc_experiment_set_threads(handle_, opt.threads)) != LC_OK) {
      return s;
    }
    if (!opt.out_dir.empty() &&
        (s = lc_experiment_set_out_dir(handle_, opt.out_dir.c_str())) != LC_OK) {
      return s;
    }
    return LC_OK;
  }

  lc_experiment* get() const { return handle_; }

 private:
  lc_experiment* handle_ = nullptr;
};

int print_owned(lc_status status, char* text) {
  if (status != LC_OK) return report_error(status);
  std::fputs(text, stdout);
  lc_string_free(text);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"levychaos: chaos decomposition experiments on a lattice"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  Options opt;
  auto add_common = [&](CLI::App* cmd, bool with_out_dir) {
    cmd->add_option("--config", opt.config, "Experiment config (TOML)")
        ->required()
        ->check(CLI::ExistingFile);
    cmd->add_option("--seed", opt.seed, "Override the config seed");
    cmd->add_option("--samples", opt.samples, "Override the sample count")
        ->check(CLI::Range(std::uint64_t{2}, UINT64_MAX));
    cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");
    if (with_out_dir) {
      cmd->add_option("--out-dir", opt.out_dir, "Directory for CSV artifacts");
    }
  };

  auto* recurrence = app.add_subcommand(
      "recurrence", "Print one cell's recurrence table as CSV");
  std::size_t cell = 0;
  add_common(recurrence, false);
  recurrence->add_option("--cell", cell, "Cell index");

  auto* simulate =
      app.add_subcommand("simulate", "Write reproducible noise samples as CSV");
  std::string out_csv;
  add_common(simulate, false);
  simulate->add_option("--out", out_csv, "Output CSV file")->required();

  auto* verify = app.add_subcommand("verify", "Run one verification check");
  std::string check;
  verify->add_option("check", check, "isometry | orthogonality | moments | cf")
      ->required()
      ->check(CLI::IsMember({"isometry", "orthogonality", "moments", "cf"}));
  add_common(verify, true);

  auto* report = app.add_subcommand(
      "report", "Run all verification checks and write summary.csv");
  add_common(report, true);

  auto* run = app.add_subcommand("run", "Run the checks listed in the config");
  add_common(run, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  }
  for (auto* cmd : {recurrence, simulate, verify, report, run}) {
    if (cmd->parsed()) {
      opt.seed_set = cmd->count("--seed") > 0;
      opt.samples_set = cmd->count("--samples") > 0;
      opt.threads_set = cmd->count("--threads") > 0;
    }
  }

  Session session;
  if (const lc_status s = session.open(opt); s != LC_OK) return report_error(s);

  if (recurrence->parsed()) {
    char* text = nullptr;
    const lc_status s = lc_experiment_recurrence_csv(session.get(), cell, &text);
    return print_owned(s, text);
  }

  if (simulate->parsed()) {
    // 0 selects the config's simulate_samples.
    const std::uint64_t n = opt.samples_set ? opt.samples : 0;
    const lc_status s = lc_experiment_simulate(
        session.get(), out_csv.c_str(), n);
    return s == LC_OK ? kExitPass : report_error(s);
  }

  if (verify->parsed()) {
    int passed = 0;
    char* text = nullptr;
    const lc_status s =
        lc_experiment_run_check(session.get(), check.c_str(), &passed, &text);
    if (s != LC_OK) return report_error(s);
    std::fputs(text, stdout);
    lc_string_free(text);
    return passed ? kExitPass : kExitCheckFailure;
  }

  if (report->parsed()) {
    const lc_status s = lc_experiment_set_checks(
        session.get(), "isometry,orthogonality,moments,cf,report");
    if (s != LC_OK) return report_error(s);
  }

  int passed = 0;
  if (const lc_status s = lc_experiment_run(session.get(), &passed); s != LC_OK) {
    return report_error(s);
  }
  return passed ? kExitPass : kExitCheckFailure;
}
