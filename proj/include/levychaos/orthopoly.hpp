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
#include <limits>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "levychaos/measure.hpp"

namespace levychaos {

inline constexpr std::size_t kInfiniteSupport =
    std::numeric_limits<std::size_t>::max();

/// Three-term recurrence of the monic orthogonal polynomials q_n of a
/// measure:
///
///   s q_n(s) = q_{n+1}(s) + b_n q_n(s) + a_n q_{n-1}(s),   q_0 = 1.
///
/// `b` holds b_0..b_{K-1}, `a` holds a_1..a_K (so a[n-1] is a_n) and `gamma`
/// holds the squared norms gamma_0 = 1, gamma_n = a_1 a_2 ... a_n. Once the
/// support of the measure is exhausted (n >= support_size) the polynomials
/// vanish and the table carries a_n = 0, b_n = 0, gamma_n = 0.
struct RecurrenceTable {
  std::vector<double> b;
  std::vector<double> a;
  std::vector<double> gamma;
  std::size_t support_size = kInfiniteSupport;

  // Diagnostics from the moment-based path. Discrete measures always
  // report zero digit loss and a determinate moment problem.
  double digits_lost = 0.0;
  bool ill_conditioned = false;
  bool determinacy_checked = true;

  std::size_t degree_cut() const noexcept { return a.size(); }

  double b_at(std::size_t n) const;
  /// a_n with the convention a_0 = 0.
  double a_at(std::size_t n) const;
  double gamma_at(std::size_t n) const;

  bool finite_support() const noexcept {
    return support_size != kInfiniteSupport;
  }
  /// max_n a_n over the stored range; finite by construction.
  double max_a() const noexcept;
};

/// Recurrence coefficients up to degree cut K (b_0..b_{K-1}, a_1..a_K).
///
/// Discrete measures use the Stieltjes procedure with inner products taken
/// exactly over the atoms. Moment sequences use the Chebyshev algorithm and
/// need moments up to order 2K; its digit-loss estimate is recorded on the
/// table.
RecurrenceTable recurrence_coefficients(const SpectralMeasure& measure,
                                        std::size_t K);

/// q_k(s) by forward recurrence; zero once k >= support_size.
double evaluate_q(const RecurrenceTable& table, std::size_t k, double s);

/// Monomial expansion q_k(s) = sum_i c_i s^i, returned as c_0..c_k.
std::vector<double> monomial_coefficients(const RecurrenceTable& table,
                                          std::size_t k);

/// Multiplication-by-s in the normalized basis q_n / sqrt(gamma_n): the
/// (K+1)x(K+1) symmetric tridiagonal matrix with diagonal b_n and
/// off-diagonal sqrt(a_{n+1}).
Eigen::MatrixXd jacobi_matrix(const RecurrenceTable& table, std::size_t K);

/// Largest a_n over a family of tables (one per lattice cell).
double max_recurrence_a(std::span<const RecurrenceTable> tables,
                        std::size_t n);

}  // namespace levychaos
