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

#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "levychaos/measure.hpp"
#include "levychaos/montecarlo.hpp"

namespace levychaos {

/// One realization of the noise on the lattice.
struct PathSample {
  std::vector<double> gaussian;                       // G_j
  std::vector<std::vector<std::uint64_t>> jump_counts;  // N_{j,r}
};

/// Per-cell Levy data of a discrete measure field:
///   G_j ~ Normal(0, zero_weight_j |Delta_j|),
///   N_{j,r} ~ Poisson(lambda_{j,r}),  lambda_{j,r} = |Delta_j| w_{j,r} / s_{j,r}^2,
/// all independent.
class NoiseModel {
 public:
  explicit NoiseModel(const MeasureField& field);

  const MeasureField& field() const noexcept { return field_; }
  std::size_t cell_count() const noexcept { return field_.cell_count(); }

  double gaussian_variance(std::size_t cell) const {
    return gaussian_variance_.at(cell);
  }
  std::span<const double> jump_sizes(std::size_t cell) const {
    return jump_sizes_.at(cell);
  }
  std::span<const double> intensities(std::size_t cell) const {
    return intensities_.at(cell);
  }

  /// Deterministic in (seed, index); reuses the buffers of `out`.
  void sample(std::uint64_t seed, std::uint64_t index, PathSample& out) const;
  PathSample sample(std::uint64_t seed, std::uint64_t index) const;

  /// Compensated increment on one cell: G_j + sum_r s_r (N_r - lambda_r).
  double cell_pairing(const PathSample& path, std::size_t cell) const;
  /// <omega, phi> for piecewise-constant phi.
  double pairing(const PathSample& path, std::span<const double> phi) const;

  /// E exp(i theta <omega, phi>) in closed form.
  std::complex<double> char_functional(std::span<const double> phi,
                                       double theta) const;

 private:
  MeasureField field_;
  std::vector<double> gaussian_variance_;
  std::vector<std::vector<double>> jump_sizes_;
  std::vector<std::vector<double>> intensities_;
};

PathSample sample_path(const MeasureField& field, std::uint64_t seed,
                       std::uint64_t index);

double pairing(const NoiseModel& model, const PathSample& path,
               std::span<const double> phi);

std::complex<double> char_functional(const MeasureField& field,
                                     std::span<const double> phi,
                                     double theta);

struct CfEstimate {
  std::complex<double> value;
  double stderr_re = 0.0;
  double stderr_im = 0.0;

  /// Standard error of the complex mean, sqrt(se_re^2 + se_im^2).
  double std_error() const;
};

/// Monte Carlo mean of exp(i theta <omega, phi>) at several theta from one
/// set of reproducible paths.
std::vector<CfEstimate> empirical_cf(const NoiseModel& model,
                                     std::span<const double> phi,
                                     std::span<const double> thetas,
                                     std::size_t samples, std::uint64_t seed,
                                     std::size_t threads = 1);

CfEstimate empirical_cf(const NoiseModel& model, std::span<const double> phi,
                        double theta, std::size_t samples, std::uint64_t seed,
                        std::size_t threads = 1);

/// Mean and standard error of <omega, phi>^n for n = 1..max_power, one
/// estimate per (test function, power), ordered test-function-major.
std::vector<Estimate> empirical_pairing_moments(
    const NoiseModel& model, std::span<const std::vector<double>> phis,
    std::size_t max_power, std::size_t samples, std::uint64_t seed,
    std::size_t threads = 1);

}  // namespace levychaos
