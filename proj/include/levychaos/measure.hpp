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

#include <cstddef>
#include <span>
#include <vector>

#include "levychaos/lattice.hpp"

namespace levychaos {

/// Off-zero atom of a discrete spectral measure.
struct Atom {
  double location;
  double weight;
};

/// Jump component of the Levy decomposition: jump size and intensity per unit
/// volume (the Levy measure sigma(ds)/s^2 evaluated at the atom).
struct JumpAtom {
  double size;
  double intensity;
};

struct LevyDecomposition {
  double gaussian_variance_density;
  std::vector<JumpAtom> jumps;
};

/// Probability measure sigma on the real line driving one lattice cell.
///
/// Two tiers exist. A discrete measure (atom at zero plus finitely many
/// off-zero atoms) supports both sampling and algebra. A moment sequence
/// supports only the polynomial algebra. Instances are immutable once built
/// and validated on construction.
class SpectralMeasure {
 public:
  enum class Kind { discrete, moment_sequence };

  static SpectralMeasure discrete(double zero_weight, std::vector<Atom> atoms);
  static SpectralMeasure from_moments(std::vector<double> moments);

  /// Dirac mass at `location` (which may be zero).
  static SpectralMeasure dirac(double location);

  Kind kind() const noexcept { return kind_; }
  bool is_discrete() const noexcept { return kind_ == Kind::discrete; }

  double zero_weight() const noexcept { return zero_weight_; }
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  std::span<const double> moments() const noexcept { return moments_; }

  /// Highest moment order available; unbounded (SIZE_MAX) for discrete.
  std::size_t max_moment_order() const noexcept;

  /// Number of support points; SIZE_MAX when unknown (moment sequences).
  std::size_t support_size() const noexcept;

  /// Support points and their masses, including the atom at zero when it
  /// carries mass. Discrete measures only.
  void support(std::vector<double>& points, std::vector<double>& weights) const;

 private:
  SpectralMeasure() = default;

  Kind kind_ = Kind::discrete;
  double zero_weight_ = 0.0;
  std::vector<Atom> atoms_;
  std::vector<double> moments_;
};

double moment(const SpectralMeasure& measure, std::size_t k);

/// Absolute moment; discrete measures only.
double absolute_moment(const SpectralMeasure& measure, std::size_t k);

/// Smallest C >= 0 with int |s|^n sigma(ds) <= C^n n! for 1 <= n <= n_max.
double fit_moment_bound(const SpectralMeasure& measure, std::size_t n_max);

LevyDecomposition levy_decomposition(const SpectralMeasure& measure);

/// Piecewise-constant measure field: one spectral measure per lattice cell.
class MeasureField {
 public:
  MeasureField(Lattice lattice, std::vector<SpectralMeasure> cell_measures);

  /// Same measure in every cell.
  static MeasureField uniform(Lattice lattice, const SpectralMeasure& measure);

  const Lattice& lattice() const noexcept { return lattice_; }
  std::size_t cell_count() const noexcept { return measures_.size(); }
  const SpectralMeasure& measure(std::size_t cell) const {
    return measures_.at(cell);
  }
  std::span<const SpectralMeasure> measures() const noexcept {
    return measures_;
  }
  bool all_discrete() const noexcept;

 private:
  Lattice lattice_;
  std::vector<SpectralMeasure> measures_;
};

}  // namespace levychaos
