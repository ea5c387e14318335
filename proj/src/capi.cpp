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

#include "levychaos/levychaos.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "levychaos/error.hpp"
#include "levychaos/experiment.hpp"
#include "levychaos/fock.hpp"
#include "levychaos/measure.hpp"
#include "levychaos/orthopoly.hpp"
#include "levychaos/sampler.hpp"

struct lc_measure {
  levychaos::SpectralMeasure value;
};

struct lc_recurrence {
  levychaos::RecurrenceTable value;
};

struct lc_field {
  std::vector<double> volumes;
  std::vector<levychaos::SpectralMeasure> measures;

  levychaos::MeasureField build() const {
    return levychaos::MeasureField(levychaos::Lattice::from_volumes(volumes),
                                   measures);
  }
};

struct lc_experiment {
  levychaos::Experiment value;
};

namespace {

thread_local std::string last_error;

lc_status fail(lc_status status, const char* message) {
  last_error = message;
  return status;
}

template <class Fn>
lc_status guarded(Fn&& fn) {
  try {
    fn();
    return LC_OK;
  } catch (const levychaos::Error& e) {
    return fail(static_cast<lc_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LC_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LC_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LC_ERR_INTERNAL, "unknown error");
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw levychaos::Error(levychaos::Errc::invalid_argument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::vector<std::string> split_names(const char* names) {
  std::vector<std::string> out;
  std::string current;
  for (const char* p = names; *p != '\0'; ++p) {
    if (*p == ',') {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else if (*p != ' ') {
      current += *p;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

}  // namespace

extern "C" {

const char* lc_last_error_message(void) { return last_error.c_str(); }

const char* lc_status_name(lc_status status) {
  if (status == LC_OK) return "ok";
  if (status == LC_ERR_INTERNAL) return "internal";
  return levychaos::errc_name(static_cast<levychaos::Errc>(status));
}

const char* lc_version(void) { return "0.1.0"; }

void lc_string_free(char* text) { std::free(text); }

// --- measures ---

lc_status lc_measure_discrete(double zero_weight, const double* locations,
                              const double* weights, size_t count,
                              lc_measure** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(count == 0 || (locations != nullptr && weights != nullptr),
            "atom arrays are null");
    std::vector<levychaos::Atom> atoms;
    for (size_t i = 0; i < count; ++i) atoms.push_back({locations[i], weights[i]});
    *out = new lc_measure{
        levychaos::SpectralMeasure::discrete(zero_weight, std::move(atoms))};
  });
}

lc_status lc_measure_from_moments(const double* moments, size_t count,
                                  lc_measure** out) {
  return guarded([&] {
    require(out != nullptr, "out is null");
    require(moments != nullptr && count > 0, "moments are empty");
    *out = new lc_measure{levychaos::SpectralMeasure::from_moments(
        std::vector<double>(moments, moments + count))};
  });
}

void lc_measure_free(lc_measure* measure) { delete measure; }

lc_status lc_measure_moment(const lc_measure* measure, size_t k, double* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    *out = levychaos::moment(measure->value, k);
  });
}

lc_status lc_measure_support_size(const lc_measure* measure, size_t* out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    *out = measure->value.support_size();
  });
}

// --- recurrence ---

lc_status lc_recurrence_compute(const lc_measure* measure, size_t degree_cut,
                                lc_recurrence** out) {
  return guarded([&] {
    require(measure != nullptr && out != nullptr, "null argument");
    *out = new lc_recurrence{
        levychaos::recurrence_coefficients(measure->value, degree_cut)};
  });
}

void lc_recurrence_free(lc_recurrence* table) { delete table; }

lc_status lc_recurrence_support_size(const lc_recurrence* table, size_t* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = table->value.support_size;
  });
}

lc_status lc_recurrence_get(const lc_recurrence* table, size_t n, double* b,
                            double* a, double* gamma) {
  return guarded([&] {
    require(table != nullptr, "null table");
    const auto& t = table->value;
    if (n >= t.degree_cut()) {
      throw levychaos::Error(levychaos::Errc::order_exceeded,
                             "n must be below the degree cut");
    }
    if (b != nullptr) *b = t.b_at(n);
    if (a != nullptr) *a = t.a_at(n);
    if (gamma != nullptr) *gamma = t.gamma_at(n);
  });
}

lc_status lc_recurrence_evaluate(const lc_recurrence* table, size_t k,
                                 double s, double* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = levychaos::evaluate_q(table->value, k, s);
  });
}

// --- fields ---

lc_status lc_field_uniform(const double* volumes, size_t cells,
                           const lc_measure* measure, lc_field** out) {
  return guarded([&] {
    require(volumes != nullptr && measure != nullptr && out != nullptr,
            "null argument");
    require(cells > 0, "no cells");
    auto* f = new lc_field{std::vector<double>(volumes, volumes + cells),
                           std::vector<levychaos::SpectralMeasure>(
                               cells, measure->value)};
    try {
      (void)f->build();
    } catch (...) {
      delete f;
      throw;
    }
    *out = f;
  });
}

void lc_field_free(lc_field* field) { delete field; }

lc_status lc_field_cell_count(const lc_field* field, size_t* out) {
  return guarded([&] {
    require(field != nullptr && out != nullptr, "null argument");
    *out = field->volumes.size();
  });
}

lc_status lc_field_set_measure(lc_field* field, size_t cell,
                               const lc_measure* measure) {
  return guarded([&] {
    require(field != nullptr && measure != nullptr, "null argument");
    require(cell < field->measures.size(), "cell outside the lattice");
    field->measures[cell] = measure->value;
  });
}

lc_status lc_field_char_functional(const lc_field* field, const double* phi,
                                   double theta, double* re, double* im) {
  return guarded([&] {
    require(field != nullptr && phi != nullptr && re != nullptr &&
                im != nullptr,
            "null argument");
    const std::span<const double> f(phi, field->volumes.size());
    const auto v = levychaos::char_functional(field->build(), f, theta);
    *re = v.real();
    *im = v.imag();
  });
}

lc_status lc_field_empirical_cf(const lc_field* field, const double* phi,
                                double theta, uint64_t samples, uint64_t seed,
                                uint32_t threads, double* re, double* im,
                                double* std_error) {
  return guarded([&] {
    require(field != nullptr && phi != nullptr && re != nullptr &&
                im != nullptr,
            "null argument");
    const levychaos::NoiseModel model(field->build());
    const std::span<const double> f(phi, field->volumes.size());
    const auto e =
        levychaos::empirical_cf(model, f, theta, samples, seed, threads);
    *re = e.value.real();
    *im = e.value.imag();
    if (std_error != nullptr) *std_error = e.std_error();
  });
}

lc_status lc_field_vacuum_moment(const lc_field* field, const double* phi,
                                 size_t power, size_t degree_cut,
                                 size_t particle_cut, double* out) {
  return guarded([&] {
    require(field != nullptr && phi != nullptr && out != nullptr,
            "null argument");
    const levychaos::ModeBasis basis(field->build(), degree_cut);
    const std::vector<double> f(phi, phi + field->volumes.size());
    const std::vector<levychaos::OperatorSpec> ops(
        power, levychaos::OperatorSpec::A(f));
    *out = levychaos::vacuum_moment(basis, ops, particle_cut);
  });
}

// --- experiments ---

lc_status lc_experiment_load_file(const char* path, lc_experiment** out) {
  return guarded([&] {
    require(path != nullptr && out != nullptr, "null argument");
    *out = new lc_experiment{levychaos::Experiment(levychaos::load_config(path))};
  });
}

lc_status lc_experiment_load_string(const char* text, lc_experiment** out) {
  return guarded([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new lc_experiment{
        levychaos::Experiment(levychaos::parse_config(text, "config"))};
  });
}

void lc_experiment_free(lc_experiment* experiment) { delete experiment; }

lc_status lc_experiment_set_seed(lc_experiment* experiment, uint64_t seed) {
  return guarded([&] {
    require(experiment != nullptr, "null experiment");
    experiment->value.config().seed = seed;
  });
}

lc_status lc_experiment_set_samples(lc_experiment* experiment,
                                    uint64_t samples) {
  return guarded([&] {
    require(experiment != nullptr, "null experiment");
    if (samples < 2) {
      throw levychaos::Error(levychaos::Errc::invalid_argument,
                             "samples must be >= 2");
    }
    experiment->value.config().samples = samples;
  });
}

lc_status lc_experiment_set_threads(lc_experiment* experiment,
                                    uint32_t threads) {
  return guarded([&] {
    require(experiment != nullptr, "null experiment");
    experiment->value.config().threads = threads;
  });
}

lc_status lc_experiment_set_out_dir(lc_experiment* experiment,
                                    const char* path) {
  return guarded([&] {
    require(experiment != nullptr && path != nullptr, "null argument");
    experiment->value.config().out_dir = path;
  });
}

lc_status lc_experiment_set_checks(lc_experiment* experiment,
                                   const char* names) {
  return guarded([&] {
    require(experiment != nullptr && names != nullptr, "null argument");
    auto list = split_names(names);
    const auto known = levychaos::known_checks();
    for (const auto& n : list) {
      if (std::find(known.begin(), known.end(), n) == known.end()) {
        throw levychaos::Error(levychaos::Errc::config,
                               "unknown check '" + n + "'");
      }
    }
    experiment->value.config().checks = std::move(list);
  });
}

lc_status lc_experiment_run(const lc_experiment* experiment, int* passed) {
  return guarded([&] {
    require(experiment != nullptr && passed != nullptr, "null argument");
    *passed = experiment->value.run() ? 1 : 0;
  });
}

lc_status lc_experiment_run_check(const lc_experiment* experiment,
                                  const char* name, int* passed, char** csv) {
  return guarded([&] {
    require(experiment != nullptr && name != nullptr && passed != nullptr,
            "null argument");
    const std::string check(name);
    if (!levychaos::is_verify_check(check)) {
      throw levychaos::Error(levychaos::Errc::invalid_argument,
                             "unknown verify check '" + check + "'");
    }
    auto e = experiment->value;
    e.config().checks = {check};
    std::vector<levychaos::CheckResult> results;
    *passed = e.run(&results) ? 1 : 0;
    if (csv != nullptr) *csv = copy_string(levychaos::to_csv(results.at(0)));
  });
}

lc_status lc_experiment_recurrence_csv(const lc_experiment* experiment,
                                       size_t cell, char** csv) {
  return guarded([&] {
    require(experiment != nullptr && csv != nullptr, "null argument");
    *csv = copy_string(experiment->value.recurrence_csv(cell));
  });
}

lc_status lc_experiment_simulate(const lc_experiment* experiment,
                                 const char* out_path, uint64_t samples) {
  return guarded([&] {
    require(experiment != nullptr && out_path != nullptr, "null argument");
    const auto& config = experiment->value.config();
    experiment->value.write_simulation(
        out_path, samples > 0 ? samples : config.simulate_samples);
  });
}

}  // extern "C"
