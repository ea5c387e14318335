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

// Chaos coefficients and the chaos map on both sides: the Fock-side image
// (symmetrized tensor of polynomial modes) and the pathwise multiple
// stochastic integral built from the orthogonalized power-jump processes
// Z^(k).

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "levychaos/fock.hpp"
#include "levychaos/montecarlo.hpp"
#include "levychaos/orthopoly.hpp"
#include "levychaos/sampler.hpp"

namespace levychaos {

/// alpha = (alpha_0, alpha_1, ...): alpha_n tensor slots carry degree n.
/// Trailing zeros are dropped so equal indices compare equal.
class ChaosIndex {
 public:
  ChaosIndex() = default;
  explicit ChaosIndex(std::vector<std::size_t> counts);

  std::span<const std::size_t> counts() const noexcept { return counts_; }
  std::size_t order() const noexcept { return order_; }
  std::size_t max_degree() const noexcept;
  /// Degree attached to tuple position p (positions ordered block by block).
  std::size_t degree_at(std::size_t position) const;
  /// alpha_0! alpha_1! ...
  double factorial_product() const;

  auto operator<=>(const ChaosIndex&) const = default;

 private:
  std::vector<std::size_t> counts_;
  std::size_t order_ = 0;
};

/// f_alpha on the lattice: a value per tuple of distinct cells, symmetric
/// within each degree block. Only the sorted-per-block representative is
/// stored; the value applies to every in-block reordering.
class ChaosCoefficient {
 public:
  using CellTuple = std::vector<std::uint32_t>;

  explicit ChaosCoefficient(ChaosIndex index) : index_(std::move(index)) {}

  /// The constant functional c (empty index).
  static ChaosCoefficient constant(double c);

  const ChaosIndex& index() const noexcept { return index_; }
  const std::map<CellTuple, double>& values() const noexcept {
    return values_;
  }

  /// Sets f at `cells` (and, by symmetry, all its in-block reorderings).
  /// Tuples that repeat a cell are rejected.
  void set(std::span<const std::uint32_t> cells, double value);
  double at(std::span<const std::uint32_t> cells) const;

  /// Visits every full ordered tuple with its value.
  void for_each_full_tuple(
      const std::function<void(std::span<const std::uint32_t>, double)>& fn)
      const;

 private:
  CellTuple canonical(std::span<const std::uint32_t> cells) const;

  ChaosIndex index_;
  std::map<CellTuple, double> values_;
};

/// Random off-diagonal coefficient: every canonical tuple of distinct cells
/// among `cells` gets a value drawn uniformly from [-1, 1].
ChaosCoefficient random_coefficient(const ChaosIndex& index, std::size_t cells,
                                    std::uint64_t seed);

/// <f, g>_G: alpha! sum over full tuples f g prod_p rho_{deg p}(cell_p) with
/// rho_n(cell_j) = gamma_n(j) |Delta_j|. Zero for distinct indices.
double g_inner(const ModeBasis& basis, const ChaosCoefficient& f,
               const ChaosCoefficient& g);
double g_norm_sq(const ModeBasis& basis, const ChaosCoefficient& f);

/// Fock-side image Sym J_alpha f in the occupation basis.
FockVector kmap_fock(const ModeBasis& basis, const ChaosCoefficient& f,
                     std::size_t truncation);

/// Pathwise evaluation of the power-jump processes Y^(k)(Delta) and their
/// orthogonalization Z^(k)(Delta) = sum_i b_i^(k) Y^(i)(Delta).
class ChaosEvaluator {
 public:
  ChaosEvaluator(const MeasureField& field, std::size_t degree_cut);

  const NoiseModel& noise() const noexcept { return noise_; }
  const RecurrenceTable& table(std::size_t cell) const {
    return tables_.at(cell);
  }
  std::size_t degree_cut() const noexcept { return degree_cut_; }

  /// k = 0: compensated increment on the cell; k >= 1: sum_r s_r^{k+1} N_r
  /// minus its compensator |Delta| sum_r w_r s_r^{k-1}.
  double evaluate_Y(const PathSample& path, std::size_t cell,
                    std::size_t k) const;
  double evaluate_Z(const PathSample& path, std::size_t cell,
                    std::size_t k) const;

  /// Z^(k)(cell) for all cells and k <= max_degree; zero where q_k vanishes.
  void evaluate_Z_table(const PathSample& path, std::size_t max_degree,
                        std::vector<std::vector<double>>& out) const;

  double multiple_integral(const PathSample& path,
                           const ChaosCoefficient& f) const;

 private:
  std::size_t degree_cut_;
  NoiseModel noise_;
  std::vector<RecurrenceTable> tables_;
  std::vector<std::vector<std::vector<double>>> monomials_;  // [cell][k]
};

double evaluate_Y(const ChaosEvaluator& eval, const PathSample& path,
                  std::size_t cell, std::size_t k);
double evaluate_Z(const ChaosEvaluator& eval, const PathSample& path,
                  std::size_t cell, std::size_t k);
double evaluate_multiple_integral(const ChaosEvaluator& eval,
                                  const PathSample& path,
                                  const ChaosCoefficient& f);

/// Monte Carlo estimate of <K f, K g> in L^2(mu), i.e. the sample mean of
/// the product of the two multiple integrals.
Estimate mc_verify(const ChaosEvaluator& eval, const ChaosCoefficient& f,
                   const ChaosCoefficient& g, std::size_t samples,
                   std::uint64_t seed, std::size_t threads = 1);

/// All pairwise estimates E[K f_a K f_b], a <= b, row-major upper triangle.
std::vector<Estimate> estimate_gram(const ChaosEvaluator& eval,
                                    std::span<const ChaosCoefficient> coeffs,
                                    std::size_t samples, std::uint64_t seed,
                                    std::size_t threads = 1);

/// E[Y^(k) Y^(l)] and E[Z^(k) Z^(l)] on one cell for k, l <= max_degree
/// (row-major, (max_degree+1)^2 entries each; Z entries for degenerate
/// degrees are zero).
struct TeugelsCovariances {
  std::vector<Estimate> y;
  std::vector<Estimate> z;
};
TeugelsCovariances estimate_teugels(const ChaosEvaluator& eval,
                                    std::size_t cell, std::size_t max_degree,
                                    std::size_t samples, std::uint64_t seed,
                                    std::size_t threads = 1);

}  // namespace levychaos
