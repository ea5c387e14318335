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

#include "levychaos/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

constexpr double kSymmetryTolerance = 1e-12;

void check_phi(const ModeBasis& basis, std::span<const double> phi) {
  if (phi.size() != basis.cell_count()) {
    throw Error(Errc::invalid_argument,
                "test function has " + std::to_string(phi.size()) +
                    " values for " + std::to_string(basis.cell_count()) +
                    " cells");
  }
}

void check_vector(const OneParticleVector& f) {
  for (double c : f.coefficients) {
    if (!std::isfinite(c)) {
      throw Error(Errc::invalid_argument,
                  "one-particle vector has non-finite coefficient");
    }
  }
}

std::string window_message(std::size_t cell, std::size_t degree,
                           std::size_t shift, std::size_t K) {
  return "cell " + std::to_string(cell) + ": degree " +
         std::to_string(degree) + " raised by " + std::to_string(shift) +
         " leaves the degree window K=" + std::to_string(K);
}

}  // namespace

// --- ModeBasis -------------------------------------------------------------

ModeBasis::ModeBasis(const MeasureField& field, std::size_t degree_cut)
    : degree_cut_(degree_cut) {
  const std::size_t M = field.cell_count();
  volumes_.assign(field.lattice().volumes().begin(),
                  field.lattice().volumes().end());
  tables_.reserve(M);
  for (std::size_t j = 0; j < M; ++j) {
    tables_.push_back(recurrence_coefficients(field.measure(j), degree_cut + 1));
  }
  for (std::size_t j = 0; j < M; ++j) {
    const RecurrenceTable& t = tables_[j];
    const std::size_t dim = std::min(degree_cut + 1, t.support_size);
    dims_.push_back(dim);
    offsets_.push_back(modes_.size());
    truncated_.push_back(t.support_size > degree_cut + 1);
    for (std::size_t n = 0; n < dim; ++n) {
      const double norm = volumes_[j] * t.gamma_at(n);
      if (!(norm > 0.0)) {
        throw Error(Errc::numerical_breakdown,
                    "mode (" + std::to_string(j) + ", " + std::to_string(n) +
                        ") has non-positive norm");
      }
      modes_.push_back({j, n});
      mode_norms_.push_back(norm);
    }
    jacobi_.push_back(jacobi_matrix(t, dim - 1));
  }
}

std::size_t ModeBasis::mode_index(std::size_t cell, std::size_t degree) const {
  if (!has_mode(cell, degree)) {
    throw Error(Errc::invalid_argument,
                "no mode (" + std::to_string(cell) + ", " +
                    std::to_string(degree) + ") in the basis");
  }
  return offsets_[cell] + degree;
}

bool ModeBasis::has_mode(std::size_t cell, std::size_t degree) const {
  return cell < dims_.size() && degree < dims_[cell];
}

// --- one-particle algebra --------------------------------------------------

double inner(const OneParticleVector& u, const OneParticleVector& v) {
  if (u.size() != v.size()) {
    throw Error(Errc::invalid_argument, "one-particle vector size mismatch");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) s += u[i] * v[i];
  return s;
}

OneParticleVector embed_kernel(const ModeBasis& basis,
                               std::span<const double> phi, std::size_t i) {
  check_phi(basis, phi);
  OneParticleVector out{std::vector<double>(basis.mode_count(), 0.0)};
  for (std::size_t j = 0; j < basis.cell_count(); ++j) {
    if (phi[j] == 0.0) continue;
    if (basis.truncated(j) && i > basis.degree_cut()) {
      throw Error(Errc::truncation_overflow,
                  "cell " + std::to_string(j) + ": expanding s^" +
                      std::to_string(i) + " needs degrees beyond K=" +
                      std::to_string(basis.degree_cut()));
    }
    const Eigen::MatrixXd& J = basis.jacobi(j);
    Eigen::VectorXd col = Eigen::VectorXd::Zero(J.rows());
    col(0) = 1.0;
    for (std::size_t p = 0; p < i; ++p) col = J * col;
    const double scale = phi[j] * std::sqrt(basis.volume(j));
    for (Eigen::Index n = 0; n < col.size(); ++n) {
      out.coefficients[basis.cell_offset(j) + n] = scale * col(n);
    }
  }
  return out;
}

OneParticleVector polynomial_kernel(const ModeBasis& basis,
                                    std::span<const double> phi,
                                    std::size_t k) {
  check_phi(basis, phi);
  OneParticleVector out{std::vector<double>(basis.mode_count(), 0.0)};
  for (std::size_t j = 0; j < basis.cell_count(); ++j) {
    if (phi[j] == 0.0) continue;
    if (basis.has_mode(j, k)) {
      const std::size_t m = basis.mode_index(j, k);
      out.coefficients[m] = phi[j] * std::sqrt(basis.mode_norm(m));
    } else if (basis.truncated(j)) {
      throw Error(Errc::truncation_overflow,
                  "cell " + std::to_string(j) + ": q_" + std::to_string(k) +
                      " lies beyond K=" + std::to_string(basis.degree_cut()));
    }
    // Otherwise q_k vanishes on this cell's support.
  }
  return out;
}

OneParticleOperator multiplication_operator(const ModeBasis& basis,
                                            std::span<const double> phi,
                                            std::size_t i) {
  check_phi(basis, phi);
  OneParticleOperator B;
  B.degree_shift = i;
  B.blocks.reserve(basis.cell_count());
  for (std::size_t j = 0; j < basis.cell_count(); ++j) {
    const Eigen::MatrixXd& J = basis.jacobi(j);
    Eigen::MatrixXd power = Eigen::MatrixXd::Identity(J.rows(), J.cols());
    if (phi[j] != 0.0) {
      for (std::size_t p = 0; p < i; ++p) power = power * J;
    }
    B.blocks.push_back(phi[j] * power);
  }
  return B;
}

OneParticleOperator rho_operator(const ModeBasis& basis,
                                 std::span<const double> phi, std::size_t k) {
  check_phi(basis, phi);
  OneParticleOperator B;
  B.degree_shift = k + 1;
  B.blocks.reserve(basis.cell_count());
  for (std::size_t j = 0; j < basis.cell_count(); ++j) {
    const Eigen::MatrixXd& J = basis.jacobi(j);
    const Eigen::Index dim = J.rows();
    const RecurrenceTable& t = basis.table(j);
    if (phi[j] == 0.0 || k >= t.support_size) {
      B.blocks.push_back(Eigen::MatrixXd::Zero(dim, dim));
      continue;
    }
    if (k > basis.degree_cut() + 1) {
      throw Error(Errc::truncation_overflow,
                  "cell " + std::to_string(j) + ": s q_" + std::to_string(k) +
                      " lies beyond K=" + std::to_string(basis.degree_cut()));
    }
    // q_k(J) by the matrix form of the three-term recurrence.
    const Eigen::MatrixXd I = Eigen::MatrixXd::Identity(dim, dim);
    Eigen::MatrixXd q_prev = Eigen::MatrixXd::Zero(dim, dim), q = I;
    for (std::size_t n = 0; n < k; ++n) {
      Eigen::MatrixXd q_next = (J - t.b_at(n) * I) * q - t.a_at(n) * q_prev;
      q_prev = std::move(q);
      q = std::move(q_next);
    }
    B.blocks.push_back(phi[j] * (J * q));
  }
  return B;
}

// --- Occupation ------------------------------------------------------------

Occupation::Occupation(std::vector<std::uint32_t> modes)
    : modes_(std::move(modes)) {
  std::sort(modes_.begin(), modes_.end());
}

std::size_t Occupation::count(std::uint32_t mode) const noexcept {
  const auto [lo, hi] = std::equal_range(modes_.begin(), modes_.end(), mode);
  return static_cast<std::size_t>(hi - lo);
}

Occupation Occupation::with_added(std::uint32_t mode) const {
  Occupation out;
  out.modes_.reserve(modes_.size() + 1);
  const auto pos = std::upper_bound(modes_.begin(), modes_.end(), mode);
  out.modes_.insert(out.modes_.end(), modes_.begin(), pos);
  out.modes_.push_back(mode);
  out.modes_.insert(out.modes_.end(), pos, modes_.end());
  return out;
}

Occupation Occupation::with_removed(std::uint32_t mode) const {
  Occupation out = *this;
  const auto pos = std::lower_bound(out.modes_.begin(), out.modes_.end(), mode);
  if (pos == out.modes_.end() || *pos != mode) {
    throw Error(Errc::invalid_argument, "mode is not occupied");
  }
  out.modes_.erase(pos);
  return out;
}

double Occupation::factorial_product() const {
  double p = 1.0;
  std::size_t run = 0;
  for (std::size_t i = 0; i < modes_.size(); ++i) {
    run = (i > 0 && modes_[i] == modes_[i - 1]) ? run + 1 : 1;
    p *= static_cast<double>(run);
  }
  return p;
}

double symmetric_product_amplitude(const Occupation& occupation) {
  return std::sqrt(occupation.factorial_product());
}

// --- FockVector ------------------------------------------------------------

FockVector FockVector::vacuum(std::size_t truncation) {
  return basis_state(truncation, Occupation{});
}

FockVector FockVector::basis_state(std::size_t truncation,
                                   Occupation occupation) {
  FockVector v(truncation);
  v.add(occupation, 1.0);
  return v;
}

double FockVector::amplitude(const Occupation& occupation) const {
  const auto it = terms_.find(occupation);
  return it == terms_.end() ? 0.0 : it->second;
}

void FockVector::add(const Occupation& occupation, double amplitude) {
  if (occupation.particle_count() > truncation_) {
    throw Error(Errc::truncation_overflow,
                "state with " + std::to_string(occupation.particle_count()) +
                    " particles exceeds truncation N=" +
                    std::to_string(truncation_));
  }
  if (amplitude == 0.0) return;
  terms_[occupation] += amplitude;
}

void FockVector::prune(double relative_threshold) {
  double peak = 0.0;
  for (const auto& [occ, amp] : terms_) peak = std::max(peak, std::abs(amp));
  const double cut = relative_threshold * peak;
  std::erase_if(terms_, [cut](const auto& kv) {
    return std::abs(kv.second) <= cut;
  });
}

FockVector& FockVector::operator+=(const FockVector& other) {
  truncation_ = std::max(truncation_, other.truncation_);
  for (const auto& [occ, amp] : other.terms_) terms_[occ] += amp;
  loss_ = loss_ || other.loss_;
  prune();
  return *this;
}

FockVector& FockVector::operator*=(double factor) {
  for (auto& [occ, amp] : terms_) amp *= factor;
  prune();
  return *this;
}

FockVector operator+(FockVector a, const FockVector& b) {
  a += b;
  return a;
}

FockVector operator-(FockVector a, const FockVector& b) {
  a += (-1.0) * b;
  return a;
}

FockVector operator*(double factor, FockVector v) {
  v *= factor;
  return v;
}

double inner(const FockVector& u, const FockVector& v) {
  const auto& small = u.size() <= v.size() ? u : v;
  const auto& large = u.size() <= v.size() ? v : u;
  double s = 0.0;
  for (const auto& [occ, amp] : small.terms()) {
    s += amp * large.amplitude(occ);
  }
  return s;
}

double norm_sq(const FockVector& v) {
  double s = 0.0;
  for (const auto& [occ, amp] : v.terms()) s += amp * amp;
  return s;
}

// --- ladder operators ------------------------------------------------------

FockVector create(const OneParticleVector& f, const FockVector& v) {
  check_vector(f);
  FockVector out(v.truncation());
  if (v.truncation_loss()) out.mark_truncation_loss();
  const bool nonzero = std::any_of(f.coefficients.begin(),
                                   f.coefficients.end(),
                                   [](double c) { return c != 0.0; });
  for (const auto& [occ, amp] : v.terms()) {
    if (occ.particle_count() + 1 > v.truncation()) {
      if (nonzero) out.mark_truncation_loss();
      continue;
    }
    for (std::size_t m = 0; m < f.size(); ++m) {
      if (f[m] == 0.0) continue;
      const auto mode = static_cast<std::uint32_t>(m);
      const double factor =
          std::sqrt(static_cast<double>(occ.count(mode) + 1));
      out.add(occ.with_added(mode), amp * f[m] * factor);
    }
  }
  out.prune();
  return out;
}

FockVector annihilate(const OneParticleVector& f, const FockVector& v) {
  check_vector(f);
  FockVector out(v.truncation());
  if (v.truncation_loss()) out.mark_truncation_loss();
  for (const auto& [occ, amp] : v.terms()) {
    const auto modes = occ.modes();
    for (std::size_t p = 0; p < modes.size(); ++p) {
      if (p > 0 && modes[p] == modes[p - 1]) continue;
      const std::uint32_t mode = modes[p];
      if (mode >= f.size()) {
        throw Error(Errc::invalid_argument,
                    "occupied mode outside the one-particle vector");
      }
      if (f[mode] == 0.0) continue;
      const double factor = std::sqrt(static_cast<double>(occ.count(mode)));
      out.add(occ.with_removed(mode), amp * f[mode] * factor);
    }
  }
  out.prune();
  return out;
}

FockVector neutral(const ModeBasis& basis, const OneParticleOperator& B,
                   const FockVector& v) {
  if (B.blocks.size() != basis.cell_count()) {
    throw Error(Errc::invalid_argument, "operator/basis cell count mismatch");
  }
  std::vector<bool> active(basis.cell_count());
  for (std::size_t j = 0; j < basis.cell_count(); ++j) {
    const Eigen::MatrixXd& blk = B.blocks[j];
    const auto dim = static_cast<Eigen::Index>(basis.cell_dimension(j));
    if (blk.rows() != dim || blk.cols() != dim) {
      throw Error(Errc::invalid_argument, "operator block has wrong shape");
    }
    const double scale = std::max(1.0, blk.cwiseAbs().maxCoeff());
    if ((blk - blk.transpose()).cwiseAbs().maxCoeff() >
        kSymmetryTolerance * scale) {
      throw Error(Errc::invalid_argument,
                  "neutral operator block " + std::to_string(j) +
                      " is not symmetric");
    }
    active[j] = !blk.isZero(0.0);
  }

  FockVector out(v.truncation());
  if (v.truncation_loss()) out.mark_truncation_loss();
  for (const auto& [occ, amp] : v.terms()) {
    const auto modes = occ.modes();
    for (std::size_t p = 0; p < modes.size(); ++p) {
      if (p > 0 && modes[p] == modes[p - 1]) continue;
      const std::uint32_t mode = modes[p];
      const Mode& md = basis.mode(mode);
      if (!active[md.cell]) continue;
      if (basis.truncated(md.cell) &&
          md.degree + B.degree_shift > basis.degree_cut()) {
        throw Error(Errc::truncation_overflow,
                    window_message(md.cell, md.degree, B.degree_shift,
                                   basis.degree_cut()));
      }
      const double nu = static_cast<double>(occ.count(mode));
      const Eigen::MatrixXd& blk = B.blocks[md.cell];
      const std::size_t offset = basis.cell_offset(md.cell);
      const Occupation lowered = occ.with_removed(mode);
      for (Eigen::Index row = 0; row < blk.rows(); ++row) {
        const double entry = blk(row, static_cast<Eigen::Index>(md.degree));
        if (entry == 0.0) continue;
        const auto target = static_cast<std::uint32_t>(offset + row);
        if (target == mode) {
          out.add(occ, amp * entry * nu);
        } else {
          const double raise =
              std::sqrt(static_cast<double>(lowered.count(target) + 1));
          out.add(lowered.with_added(target),
                  amp * entry * std::sqrt(nu) * raise);
        }
      }
    }
  }
  out.prune();
  return out;
}

FockVector apply_A(const ModeBasis& basis, std::span<const double> phi,
                   const FockVector& v) {
  return apply_A_k(basis, phi, 1, v);
}

FockVector apply_A_k(const ModeBasis& basis, std::span<const double> phi,
                     std::size_t k, const FockVector& v) {
  if (k == 0) {
    throw Error(Errc::invalid_argument, "A^(k) is defined for k >= 1");
  }
  const OneParticleVector f = embed_kernel(basis, phi, k - 1);
  FockVector out = create(f, v);
  out += annihilate(f, v);
  out += neutral(basis, multiplication_operator(basis, phi, k), v);
  return out;
}

FockVector apply_R_k(const ModeBasis& basis, std::span<const double> phi,
                     std::size_t k, const FockVector& v) {
  const OneParticleVector f = polynomial_kernel(basis, phi, k);
  FockVector out = create(f, v);
  out += annihilate(f, v);
  out += neutral(basis, rho_operator(basis, phi, k), v);
  return out;
}

FockVector apply(const ModeBasis& basis, const OperatorSpec& op,
                 const FockVector& v) {
  switch (op.kind) {
    case OperatorSpec::Kind::A: return apply_A(basis, op.phi, v);
    case OperatorSpec::Kind::A_k: return apply_A_k(basis, op.phi, op.k, v);
    case OperatorSpec::Kind::R_k: return apply_R_k(basis, op.phi, op.k, v);
  }
  throw Error(Errc::invalid_argument, "unknown operator kind");
}

double vacuum_moment(const ModeBasis& basis, std::span<const OperatorSpec> ops,
                     std::size_t truncation) {
  if (ops.size() > truncation) {
    throw Error(Errc::truncation_overflow,
                std::to_string(ops.size()) +
                    " operators exceed particle truncation N=" +
                    std::to_string(truncation));
  }
  FockVector state = FockVector::vacuum(truncation);
  for (auto it = ops.rbegin(); it != ops.rend(); ++it) {
    state = apply(basis, *it, state);
    if (state.truncation_loss()) {
      throw Error(Errc::truncation_overflow,
                  "operator product left the particle truncation");
    }
  }
  return state.amplitude(Occupation{});
}

}  // namespace levychaos
