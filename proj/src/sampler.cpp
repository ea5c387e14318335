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

#include "levychaos/sampler.hpp"

#include <cmath>
#include <random>
#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

void check_samples(std::size_t samples) {
  if (samples < 2) {
    throw Error(Errc::invalid_argument,
                "Monte Carlo estimates need at least 2 samples");
  }
}

}  // namespace

NoiseModel::NoiseModel(const MeasureField& field) : field_(field) {
  const std::size_t M = field_.cell_count();
  gaussian_variance_.resize(M);
  jump_sizes_.resize(M);
  intensities_.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    const SpectralMeasure& m = field_.measure(j);
    if (!m.is_discrete()) {
      throw Error(Errc::unsupported_kind,
                  "cell " + std::to_string(j) +
                      ": path sampling needs a discrete measure");
    }
    const double vol = field_.lattice().volume(j);
    const LevyDecomposition levy = levy_decomposition(m);
    gaussian_variance_[j] = levy.gaussian_variance_density * vol;
    for (const JumpAtom& jump : levy.jumps) {
      jump_sizes_[j].push_back(jump.size);
      intensities_[j].push_back(jump.intensity * vol);
    }
  }
}

void NoiseModel::sample(std::uint64_t seed, std::uint64_t index,
                        PathSample& out) const {
  const std::size_t M = cell_count();
  out.gaussian.resize(M);
  out.jump_counts.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double var = gaussian_variance_[j];
    if (var > 0.0) {
      StreamRng rng(seed, index, j, 0);
      std::normal_distribution<double> normal(0.0, std::sqrt(var));
      out.gaussian[j] = normal(rng);
    } else {
      out.gaussian[j] = 0.0;
    }
    const auto& lambda = intensities_[j];
    out.jump_counts[j].resize(lambda.size());
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      StreamRng rng(seed, index, j, r + 1);
      std::poisson_distribution<std::uint64_t> poisson(lambda[r]);
      out.jump_counts[j][r] = poisson(rng);
    }
  }
}

PathSample NoiseModel::sample(std::uint64_t seed, std::uint64_t index) const {
  PathSample out;
  sample(seed, index, out);
  return out;
}

double NoiseModel::cell_pairing(const PathSample& path,
                                std::size_t cell) const {
  double x = path.gaussian[cell];
  const auto& sizes = jump_sizes_[cell];
  const auto& lambda = intensities_[cell];
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    x += sizes[r] *
         (static_cast<double>(path.jump_counts[cell][r]) - lambda[r]);
  }
  return x;
}

double NoiseModel::pairing(const PathSample& path,
                           std::span<const double> phi) const {
  if (phi.size() != cell_count()) {
    throw Error(Errc::invalid_argument, "test function size mismatch");
  }
  double x = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    if (phi[j] != 0.0) x += phi[j] * cell_pairing(path, j);
  }
  return x;
}

std::complex<double> NoiseModel::char_functional(std::span<const double> phi,
                                                 double theta) const {
  if (phi.size() != cell_count()) {
    throw Error(Errc::invalid_argument, "test function size mismatch");
  }
  const std::complex<double> i(0.0, 1.0);
  std::complex<double> exponent = 0.0;
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const double tp = theta * phi[j];
    exponent += -0.5 * tp * tp * gaussian_variance_[j];
    const auto& sizes = jump_sizes_[j];
    const auto& lambda = intensities_[j];
    for (std::size_t r = 0; r < sizes.size(); ++r) {
      const double u = tp * sizes[r];
      // e^{iu} - iu - 1, expanded near 0 to keep relative accuracy.
      std::complex<double> term;
      if (std::abs(u) < 1e-4) {
        term = std::complex<double>(-u * u / 2.0 + u * u * u * u / 24.0,
                                    -u * u * u / 6.0);
      } else {
        term = std::exp(i * u) - i * u - 1.0;
      }
      exponent += lambda[r] * term;
    }
  }
  return std::exp(exponent);
}

PathSample sample_path(const MeasureField& field, std::uint64_t seed,
                       std::uint64_t index) {
  return NoiseModel(field).sample(seed, index);
}

double pairing(const NoiseModel& model, const PathSample& path,
               std::span<const double> phi) {
  return model.pairing(path, phi);
}

std::complex<double> char_functional(const MeasureField& field,
                                     std::span<const double> phi,
                                     double theta) {
  return NoiseModel(field).char_functional(phi, theta);
}

double CfEstimate::std_error() const {
  return std::sqrt(stderr_re * stderr_re + stderr_im * stderr_im);
}

std::vector<CfEstimate> empirical_cf(const NoiseModel& model,
                                     std::span<const double> phi,
                                     std::span<const double> thetas,
                                     std::size_t samples, std::uint64_t seed,
                                     std::size_t threads) {
  check_samples(samples);
  const std::size_t T = thetas.size();
  const std::vector<double> theta(thetas.begin(), thetas.end());
  const std::vector<double> phi_copy(phi.begin(), phi.end());
  const MomentSums sums = accumulate_blocks(
      samples, threads, 2 * T,
      [&](std::size_t begin, std::size_t end, MomentSums& acc) {
        PathSample path;
        std::vector<double> values(2 * T);
        for (std::size_t s = begin; s < end; ++s) {
          model.sample(seed, s, path);
          const double x = model.pairing(path, phi_copy);
          for (std::size_t t = 0; t < T; ++t) {
            values[2 * t] = std::cos(theta[t] * x);
            values[2 * t + 1] = std::sin(theta[t] * x);
          }
          acc.add(values);
        }
      });
  std::vector<CfEstimate> out(T);
  for (std::size_t t = 0; t < T; ++t) {
    const Estimate re = sums.estimate(2 * t);
    const Estimate im = sums.estimate(2 * t + 1);
    out[t].value = {re.mean, im.mean};
    out[t].stderr_re = re.std_error;
    out[t].stderr_im = im.std_error;
  }
  return out;
}

CfEstimate empirical_cf(const NoiseModel& model, std::span<const double> phi,
                        double theta, std::size_t samples, std::uint64_t seed,
                        std::size_t threads) {
  const double thetas[] = {theta};
  return empirical_cf(model, phi, thetas, samples, seed, threads).front();
}

std::vector<Estimate> empirical_pairing_moments(
    const NoiseModel& model, std::span<const std::vector<double>> phis,
    std::size_t max_power, std::size_t samples, std::uint64_t seed,
    std::size_t threads) {
  check_samples(samples);
  const std::size_t Q = phis.size() * max_power;
  const MomentSums sums = accumulate_blocks(
      samples, threads, Q,
      [&](std::size_t begin, std::size_t end, MomentSums& acc) {
        PathSample path;
        std::vector<double> values(Q);
        for (std::size_t s = begin; s < end; ++s) {
          model.sample(seed, s, path);
          for (std::size_t f = 0; f < phis.size(); ++f) {
            const double x = model.pairing(path, phis[f]);
            double power = 1.0;
            for (std::size_t n = 0; n < max_power; ++n) {
              power *= x;
              values[f * max_power + n] = power;
            }
          }
          acc.add(values);
        }
      });
  return sums.estimates();
}

}  // namespace levychaos
