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

#include "levychaos/measure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include <Eigen/Dense>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

constexpr double kMassTolerance = 1e-12;
constexpr double kHankelTolerance = 1e-12;

void check_hankel(const std::vector<double>& moments) {
  const std::size_t size = (moments.size() - 1) / 2 + 1;
  Eigen::MatrixXd hankel(size, size);
  for (std::size_t i = 0; i < size; ++i) {
    for (std::size_t j = 0; j < size; ++j) hankel(i, j) = moments[i + j];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      hankel, Eigen::EigenvaluesOnly);
  const auto& eig = solver.eigenvalues();
  const double scale = eig.cwiseAbs().maxCoeff();
  if (eig.minCoeff() < -kHankelTolerance * scale) {
    throw Error(Errc::invalid_measure,
                "moment sequence is not positive semidefinite (Hankel "
                "eigenvalue " +
                    std::to_string(eig.minCoeff()) + ")");
  }
}

}  // namespace

SpectralMeasure SpectralMeasure::discrete(double zero_weight,
                                          std::vector<Atom> atoms) {
  if (!(zero_weight >= 0.0 && zero_weight <= 1.0 + kMassTolerance)) {
    throw Error(Errc::invalid_measure, "zero_weight must lie in [0, 1]");
  }
  double mass = zero_weight;
  for (std::size_t r = 0; r < atoms.size(); ++r) {
    const Atom& a = atoms[r];
    if (!std::isfinite(a.location) || a.location == 0.0) {
      throw Error(Errc::invalid_measure,
                  "atom " + std::to_string(r) +
                      " must have a finite nonzero location (use zero_weight "
                      "for the atom at 0)");
    }
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw Error(Errc::invalid_measure,
                  "atom " + std::to_string(r) + " must have positive weight");
    }
    for (std::size_t q = 0; q < r; ++q) {
      if (atoms[q].location == a.location) {
        throw Error(Errc::invalid_measure, "atom locations must be distinct");
      }
    }
    mass += a.weight;
  }
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw Error(Errc::invalid_measure,
                "total mass is " + std::to_string(mass) + ", expected 1");
  }
  SpectralMeasure m;
  m.kind_ = Kind::discrete;
  m.zero_weight_ = zero_weight;
  m.atoms_ = std::move(atoms);
  return m;
}

SpectralMeasure SpectralMeasure::from_moments(std::vector<double> moments) {
  if (moments.empty()) {
    throw Error(Errc::invalid_measure, "moment sequence is empty");
  }
  for (double v : moments) {
    if (!std::isfinite(v)) {
      throw Error(Errc::invalid_measure, "moment sequence has non-finite entry");
    }
  }
  if (std::abs(moments[0] - 1.0) > kMassTolerance) {
    throw Error(Errc::invalid_measure, "moment m0 must equal 1");
  }
  check_hankel(moments);
  SpectralMeasure m;
  m.kind_ = Kind::moment_sequence;
  m.moments_ = std::move(moments);
  return m;
}

SpectralMeasure SpectralMeasure::dirac(double location) {
  if (location == 0.0) return discrete(1.0, {});
  return discrete(0.0, {Atom{location, 1.0}});
}

std::size_t SpectralMeasure::max_moment_order() const noexcept {
  if (kind_ == Kind::discrete) return std::numeric_limits<std::size_t>::max();
  return moments_.size() - 1;
}

std::size_t SpectralMeasure::support_size() const noexcept {
  if (kind_ == Kind::moment_sequence) {
    return std::numeric_limits<std::size_t>::max();
  }
  return atoms_.size() + (zero_weight_ > 0.0 ? 1 : 0);
}

void SpectralMeasure::support(std::vector<double>& points,
                              std::vector<double>& weights) const {
  if (kind_ != Kind::discrete) {
    throw Error(Errc::unsupported_kind,
                "support points are only known for discrete measures");
  }
  points.clear();
  weights.clear();
  if (zero_weight_ > 0.0) {
    points.push_back(0.0);
    weights.push_back(zero_weight_);
  }
  for (const Atom& a : atoms_) {
    points.push_back(a.location);
    weights.push_back(a.weight);
  }
}

double moment(const SpectralMeasure& measure, std::size_t k) {
  if (measure.kind() == SpectralMeasure::Kind::moment_sequence) {
    if (k > measure.max_moment_order()) {
      throw Error(Errc::order_exceeded,
                  "moment of order " + std::to_string(k) +
                      " requested but only " +
                      std::to_string(measure.max_moment_order()) +
                      " are stored");
    }
    return measure.moments()[k];
  }
  double sum = k == 0 ? measure.zero_weight() : 0.0;
  for (const Atom& a : measure.atoms()) {
    sum += a.weight * std::pow(a.location, static_cast<double>(k));
  }
  return sum;
}

double absolute_moment(const SpectralMeasure& measure, std::size_t k) {
  if (!measure.is_discrete()) {
    throw Error(Errc::unsupported_kind,
                "absolute moments are not determined by a moment sequence");
  }
  double sum = k == 0 ? measure.zero_weight() : 0.0;
  for (const Atom& a : measure.atoms()) {
    sum += a.weight * std::pow(std::abs(a.location), static_cast<double>(k));
  }
  return sum;
}

double fit_moment_bound(const SpectralMeasure& measure, std::size_t n_max) {
  if (!measure.is_discrete()) {
    throw Error(Errc::unsupported_kind,
                "moment bound needs absolute moments (discrete measures only)");
  }
  double c = 0.0;
  for (std::size_t n = 1; n <= n_max; ++n) {
    const double m = absolute_moment(measure, n);
    if (m <= 0.0) continue;
    const double dn = static_cast<double>(n);
    c = std::max(c, std::exp((std::log(m) - std::lgamma(dn + 1.0)) / dn));
  }
  return c;
}

LevyDecomposition levy_decomposition(const SpectralMeasure& measure) {
  if (!measure.is_discrete()) {
    throw Error(Errc::unsupported_kind,
                "Levy decomposition needs a discrete measure");
  }
  LevyDecomposition out;
  out.gaussian_variance_density = measure.zero_weight();
  out.jumps.reserve(measure.atoms().size());
  for (const Atom& a : measure.atoms()) {
    out.jumps.push_back({a.location, a.weight / (a.location * a.location)});
  }
  return out;
}

MeasureField::MeasureField(Lattice lattice,
                           std::vector<SpectralMeasure> cell_measures)
    : lattice_(std::move(lattice)), measures_(std::move(cell_measures)) {
  if (measures_.size() != lattice_.cell_count()) {
    throw Error(Errc::invalid_argument,
                "measure field has " + std::to_string(measures_.size()) +
                    " measures for " + std::to_string(lattice_.cell_count()) +
                    " cells");
  }
}

MeasureField MeasureField::uniform(Lattice lattice,
                                   const SpectralMeasure& measure) {
  std::vector<SpectralMeasure> measures(lattice.cell_count(), measure);
  return MeasureField(std::move(lattice), std::move(measures));
}

bool MeasureField::all_discrete() const noexcept {
  return std::all_of(measures_.begin(), measures_.end(),
                     [](const SpectralMeasure& m) { return m.is_discrete(); });
}

}  // namespace levychaos
