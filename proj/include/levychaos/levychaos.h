/*
 * Copyright 2026 The levychaos Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to levychaos. All objects are opaque handles owned by the
 * caller and released with the matching *_free function. Every fallible call
 * returns an lc_status; on failure, lc_last_error_message() describes the
 * most recent error on the calling thread.
 */

#ifndef LEVYCHAOS_LEVYCHAOS_H
#define LEVYCHAOS_LEVYCHAOS_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(LEVYCHAOS_BUILDING)
#    define LC_API __declspec(dllexport)
#  else
#    define LC_API __declspec(dllimport)
#  endif
#else
#  define LC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lc_status {
  LC_OK = 0,
  LC_ERR_INVALID_ARGUMENT = 1,
  LC_ERR_INVALID_MEASURE = 2,
  LC_ERR_ORDER_EXCEEDED = 3,
  LC_ERR_UNSUPPORTED_KIND = 4,
  LC_ERR_NUMERICAL_BREAKDOWN = 5,
  LC_ERR_DEGENERATE_DEGREE = 6,
  LC_ERR_TRUNCATION_OVERFLOW = 7,
  LC_ERR_SIZE_EXCEEDED = 8,
  LC_ERR_REPEATED_CELL = 9,
  LC_ERR_CONFIG = 10,
  LC_ERR_IO = 11,
  LC_ERR_INTERNAL = 99
} lc_status;

typedef struct lc_measure lc_measure;
typedef struct lc_recurrence lc_recurrence;
typedef struct lc_field lc_field;
typedef struct lc_experiment lc_experiment;

/* Thread-local; valid until the next failing call on the same thread. */
LC_API const char* lc_last_error_message(void);
LC_API const char* lc_status_name(lc_status status);
LC_API const char* lc_version(void);

/* Heap strings returned by the library. */
LC_API void lc_string_free(char* text);

/* --- spectral measures --- */

/* zero_weight + sum_i weights[i] delta(locations[i]); locations nonzero. */
LC_API lc_status lc_measure_discrete(double zero_weight,
                                     const double* locations,
                                     const double* weights, size_t count,
                                     lc_measure** out);
/* moments[0] must be 1; the Hankel matrix must be positive semidefinite. */
LC_API lc_status lc_measure_from_moments(const double* moments, size_t count,
                                         lc_measure** out);
LC_API void lc_measure_free(lc_measure* measure);
LC_API lc_status lc_measure_moment(const lc_measure* measure, size_t k,
                                   double* out);
/* SIZE_MAX when the support is not known (moment sequences). */
LC_API lc_status lc_measure_support_size(const lc_measure* measure,
                                         size_t* out);

/* --- three-term recurrence --- */

LC_API lc_status lc_recurrence_compute(const lc_measure* measure,
                                       size_t degree_cut, lc_recurrence** out);
LC_API void lc_recurrence_free(lc_recurrence* table);
LC_API lc_status lc_recurrence_support_size(const lc_recurrence* table,
                                            size_t* out);
/* b_n, a_n (a_0 = 0) and gamma_n for 0 <= n < degree_cut. */
LC_API lc_status lc_recurrence_get(const lc_recurrence* table, size_t n,
                                   double* b, double* a, double* gamma);
/* Monic q_k(s). */
LC_API lc_status lc_recurrence_evaluate(const lc_recurrence* table, size_t k,
                                        double s, double* out);

/* --- measure fields on a 1-d lattice --- */

/* Contiguous cells of the given volumes, one measure for all of them. */
LC_API lc_status lc_field_uniform(const double* volumes, size_t cells,
                                  const lc_measure* measure, lc_field** out);
LC_API void lc_field_free(lc_field* field);
LC_API lc_status lc_field_cell_count(const lc_field* field, size_t* out);
LC_API lc_status lc_field_set_measure(lc_field* field, size_t cell,
                                      const lc_measure* measure);
/* Closed-form E exp(i theta <omega, phi>); phi has one value per cell. */
LC_API lc_status lc_field_char_functional(const lc_field* field,
                                          const double* phi, double theta,
                                          double* re, double* im);
/* Monte Carlo counterpart with its combined standard error. */
LC_API lc_status lc_field_empirical_cf(const lc_field* field,
                                       const double* phi, double theta,
                                       uint64_t samples, uint64_t seed,
                                       uint32_t threads, double* re,
                                       double* im, double* std_error);
/* <Omega, A(phi)^power Omega> with degree cut K and particle cut N. */
LC_API lc_status lc_field_vacuum_moment(const lc_field* field,
                                        const double* phi, size_t power,
                                        size_t degree_cut,
                                        size_t particle_cut, double* out);

/* --- experiments --- */

LC_API lc_status lc_experiment_load_file(const char* path,
                                         lc_experiment** out);
LC_API lc_status lc_experiment_load_string(const char* text,
                                           lc_experiment** out);
LC_API void lc_experiment_free(lc_experiment* experiment);

LC_API lc_status lc_experiment_set_seed(lc_experiment* experiment,
                                        uint64_t seed);
LC_API lc_status lc_experiment_set_samples(lc_experiment* experiment,
                                           uint64_t samples);
LC_API lc_status lc_experiment_set_threads(lc_experiment* experiment,
                                           uint32_t threads);
LC_API lc_status lc_experiment_set_out_dir(lc_experiment* experiment,
                                           const char* path);
/* Replaces the configured check list; names separated by commas. */
LC_API lc_status lc_experiment_set_checks(lc_experiment* experiment,
                                          const char* names);

/* Runs the configured checks and writes their artifacts. *passed is 1 iff
   every verify check passed. */
LC_API lc_status lc_experiment_run(const lc_experiment* experiment,
                                   int* passed);
/* Runs one verify check (isometry, orthogonality, moments, cf), writes
   <out_dir>/<name>.csv and, if csv is not NULL, returns the same text. */
LC_API lc_status lc_experiment_run_check(const lc_experiment* experiment,
                                         const char* name, int* passed,
                                         char** csv);
LC_API lc_status lc_experiment_recurrence_csv(const lc_experiment* experiment,
                                              size_t cell, char** csv);
/* samples = 0 uses the config's simulate_samples. */
LC_API lc_status lc_experiment_simulate(const lc_experiment* experiment,
                                        const char* out_path,
                                        uint64_t samples);

#ifdef __cplusplus
}
#endif

#endif /* LEVYCHAOS_LEVYCHAOS_H */
