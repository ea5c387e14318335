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

// Truncated symmetric Fock space over the lattice one-particle space
// H = L^2(dx sigma(x, ds)).
//
// The one-particle space is spanned by the orthonormal modes
//
//   e_{j,n}(x, s) = chi_{Delta_j}(x) q_n(x, s) / sqrt(|Delta_j| gamma_n(j)),
//
// one per cell j and polynomial degree n below min(K + 1, support_j). Fock
// states are sparse maps over occupation multi-indices in the normalized
// occupation basis |nu>, so creation, annihilation and second quantization
// have their textbook bosonic matrix elements.

#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "levychaos/measure.hpp"
#include "levychaos/orthopoly.hpp"

namespace levychaos {

struct Mode {
  std::size_t cell;
  std::size_t degree;
};

class ModeBasis {
 public:
  /// Builds per-cell recurrences up to degree K + 1 so the normalized
  /// Jacobi blocks cover degrees 0..K exactly.
  ModeBasis(const MeasureField& field, std::size_t degree_cut);

  std::size_t degree_cut() const noexcept { return degree_cut_; }
  std::size_t cell_count() const noexcept { return volumes_.size(); }
  std::size_t mode_count() const noexcept { return modes_.size(); }

  double volume(std::size_t cell) const { return volumes_.at(cell); }
  const RecurrenceTable& table(std::size_t cell) const {
    return tables_.at(cell);
  }
  std::span<const RecurrenceTable> tables() const noexcept { return tables_; }

  /// Number of modes carried by a cell: min(K + 1, support size).
  std::size_t cell_dimension(std::size_t cell) const {
    return dims_.at(cell);
  }
  std::size_t cell_offset(std::size_t cell) const { return offsets_.at(cell); }

  /// True when the cell's measure has more than K + 1 support points, so the
  /// degree window is a genuine truncation.
  bool truncated(std::size_t cell) const { return truncated_.at(cell); }

  const Mode& mode(std::size_t index) const { return modes_.at(index); }
  std::size_t mode_index(std::size_t cell, std::size_t degree) const;
  bool has_mode(std::size_t cell, std::size_t degree) const;

  /// ||chi_{Delta_j} q_n||_H^2 = |Delta_j| gamma_n(j).
  double mode_norm(std::size_t index) const { return mode_norms_.at(index); }

  /// Normalized Jacobi block of a cell, cell_dimension x cell_dimension.
  const Eigen::MatrixXd& jacobi(std::size_t cell) const {
    return jacobi_.at(cell);
  }

 private:
  std::size_t degree_cut_;
  std::vector<double> volumes_;
  std::vector<RecurrenceTable> tables_;
  std::vector<std::size_t> dims_;
  std::vector<std::size_t> offsets_;
  std::vector<bool> truncated_;
  std::vector<Mode> modes_;
  std::vector<double> mode_norms_;
  std::vector<Eigen::MatrixXd> jacobi_;
};

/// Coefficients of a one-particle vector over the modes of a ModeBasis.
struct OneParticleVector {
  std::vector<double> coefficients;

  double operator[](std::size_t i) const { return coefficients[i]; }
  std::size_t size() const noexcept { return coefficients.size(); }
};

double inner(const OneParticleVector& u, const OneParticleVector& v);

/// Block-diagonal (in cell) one-particle operator. `degree_shift` is the
/// largest amount by which the operator can raise a polynomial degree; the
/// exactness window is checked against it.
struct OneParticleOperator {
  std::vector<Eigen::MatrixXd> blocks;
  std::size_t degree_shift = 0;
};

/// Occupation multi-index, stored as the sorted multiset of occupied modes.
class Occupation {
 public:
  Occupation() = default;
  explicit Occupation(std::vector<std::uint32_t> modes);

  std::size_t particle_count() const noexcept { return modes_.size(); }
  std::size_t count(std::uint32_t mode) const noexcept;
  std::span<const std::uint32_t> modes() const noexcept { return modes_; }

  Occupation with_added(std::uint32_t mode) const;
  /// Requires count(mode) > 0.
  Occupation with_removed(std::uint32_t mode) const;

  /// (nu_0! nu_1! ...), the squared norm of e^{(.)nu} in the weighted space.
  double factorial_product() const;

  auto operator<=>(const Occupation&) const = default;

 private:
  std::vector<std::uint32_t> modes_;
};

/// Amplitude of the normalized basis state |nu> inside the symmetric product
/// e_{m_1} (.) ... (.) e_{m_n}: that product equals sqrt(nu!) |nu>. This is
/// the single place where the occupation-number normalization lives.
double symmetric_product_amplitude(const Occupation& occupation);

/// Sparse state in the truncated Fock space, particle number <= truncation.
class FockVector {
 public:
  explicit FockVector(std::size_t truncation) : truncation_(truncation) {}

  static FockVector vacuum(std::size_t truncation);
  static FockVector basis_state(std::size_t truncation, Occupation occupation);

  std::size_t truncation() const noexcept { return truncation_; }
  const std::map<Occupation, double>& terms() const noexcept { return terms_; }
  bool empty() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  double amplitude(const Occupation& occupation) const;
  /// Accumulates; rejects particle counts above the truncation.
  void add(const Occupation& occupation, double amplitude);

  /// Set when an operator pushed components past the truncation.
  bool truncation_loss() const noexcept { return loss_; }
  void mark_truncation_loss() noexcept { loss_ = true; }

  /// Drops amplitudes below threshold * max |amplitude|.
  void prune(double relative_threshold = 1e-15);

  FockVector& operator+=(const FockVector& other);
  FockVector& operator*=(double factor);

 private:
  std::size_t truncation_;
  std::map<Occupation, double> terms_;
  bool loss_ = false;
};

FockVector operator+(FockVector a, const FockVector& b);
FockVector operator-(FockVector a, const FockVector& b);
FockVector operator*(double factor, FockVector v);

double inner(const FockVector& u, const FockVector& v);
double norm_sq(const FockVector& v);

/// phi (x) m_i: coefficients phi_j sqrt(|Delta_j|) (J_j^i)_{n,0}. Refuses
/// (truncation-overflow) when s^i needs degrees beyond the cut.
OneParticleVector embed_kernel(const ModeBasis& basis,
                               std::span<const double> phi, std::size_t i);

/// phi q_k: a single mode per cell with coefficient phi_j sqrt(|Delta_j|
/// gamma_k(j)); zero in cells where q_k vanishes.
OneParticleVector polynomial_kernel(const ModeBasis& basis,
                                    std::span<const double> phi,
                                    std::size_t k);

/// Multiplication by phi(x) s^i: blocks phi_j J_j^i.
OneParticleOperator multiplication_operator(const ModeBasis& basis,
                                            std::span<const double> phi,
                                            std::size_t i);

/// Multiplication by phi(x) s q_k(x, s): blocks phi_j J_j q_k(J_j).
OneParticleOperator rho_operator(const ModeBasis& basis,
                                 std::span<const double> phi, std::size_t k);

FockVector create(const OneParticleVector& f, const FockVector& v);
FockVector annihilate(const OneParticleVector& f, const FockVector& v);
/// Second quantization dGamma(B).
FockVector neutral(const ModeBasis& basis, const OneParticleOperator& B,
                   const FockVector& v);

/// A(phi) = a+(phi m_0) + a-(phi m_0) + a0(phi m_1).
FockVector apply_A(const ModeBasis& basis, std::span<const double> phi,
                   const FockVector& v);
/// A^(k)(phi) = a+(phi m_{k-1}) + a-(phi m_{k-1}) + a0(phi m_k), k >= 1.
FockVector apply_A_k(const ModeBasis& basis, std::span<const double> phi,
                     std::size_t k, const FockVector& v);
/// R^(k)(phi) = a+(phi q_k) + a-(phi q_k) + a0(phi s q_k).
FockVector apply_R_k(const ModeBasis& basis, std::span<const double> phi,
                     std::size_t k, const FockVector& v);

struct OperatorSpec {
  enum class Kind { A, A_k, R_k };

  Kind kind = Kind::A;
  std::vector<double> phi;
  std::size_t k = 1;

  static OperatorSpec A(std::vector<double> phi) {
    return {Kind::A, std::move(phi), 1};
  }
  static OperatorSpec A_k(std::vector<double> phi, std::size_t k) {
    return {Kind::A_k, std::move(phi), k};
  }
  static OperatorSpec R_k(std::vector<double> phi, std::size_t k) {
    return {Kind::R_k, std::move(phi), k};
  }
};

FockVector apply(const ModeBasis& basis, const OperatorSpec& op,
                 const FockVector& v);

/// <Omega, Op_1 ... Op_n Omega> in the space truncated at `truncation`
/// particles. Any truncation loss is an error.
double vacuum_moment(const ModeBasis& basis, std::span<const OperatorSpec> ops,
                     std::size_t truncation);

}  // namespace levychaos
