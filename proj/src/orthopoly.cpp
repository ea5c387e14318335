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

#include "levychaos/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

constexpr double kBreakdownTolerance = 1e-10;
constexpr double kExhaustionTolerance = 1e-13;
constexpr double kMaxDigitLoss = 6.0;

bool exhausted(double a_n, double gamma_prev) {
  return a_n < kExhaustionTolerance * std::max(1.0, gamma_prev);
}

void check_breakdown(double a_n, std::size_t n) {
  if (a_n < -kBreakdownTolerance) {
    throw Error(Errc::numerical_breakdown,
                "recurrence coefficient a_" + std::to_string(n) + " = " +
                    std::to_string(a_n) +
                    " is negative; moments are not positive definite");
  }
}

RecurrenceTable empty_table(std::size_t K) {
  RecurrenceTable t;
  t.b.assign(K, 0.0);
  t.a.assign(K, 0.0);
  t.gamma.assign(K + 1, 0.0);
  t.gamma[0] = 1.0;
  return t;
}

void finish_exhausted(RecurrenceTable& t, std::size_t support) {
  t.support_size = support;
  for (std::size_t n = support; n <= t.degree_cut(); ++n) {
    if (n < t.b.size()) t.b[n] = 0.0;
    if (n >= 1) t.a[n - 1] = 0.0;
    t.gamma[n] = 0.0;
  }
}

// Stieltjes procedure: inner products are finite sums over the atoms.
RecurrenceTable stieltjes(const SpectralMeasure& measure, std::size_t K) {
  std::vector<double> x, w;
  measure.support(x, w);
  const std::size_t m = x.size();

  RecurrenceTable t = empty_table(K);
  t.support_size = m;
  if (m == 0) return t;

  std::vector<double> p_prev(m, 0.0), p(m, 1.0), p_next(m);
  double a_n = 0.0;
  for (std::size_t n = 0; n < K; ++n) {
    if (n >= t.support_size) break;
    double norm = 0.0, first = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      norm += w[i] * p[i] * p[i];
      first += w[i] * x[i] * p[i] * p[i];
    }
    const double b_n = first / norm;
    t.b[n] = b_n;
    double next_norm = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
      p_next[i] = (x[i] - b_n) * p[i] - a_n * p_prev[i];
      next_norm += w[i] * p_next[i] * p_next[i];
    }
    if (n + 1 >= t.support_size) break;
    a_n = next_norm / norm;
    if (exhausted(a_n, t.gamma[n])) {
      finish_exhausted(t, n + 1);
      break;
    }
    t.a[n] = a_n;
    t.gamma[n + 1] = t.gamma[n] * a_n;
    std::swap(p_prev, p);
    std::swap(p, p_next);
  }
  if (t.support_size < K + 1) finish_exhausted(t, t.support_size);
  return t;
}

// Classical Chebyshev algorithm on raw moments. sigma_k(l) = int q_k s^l.
RecurrenceTable chebyshev(const SpectralMeasure& measure, std::size_t K) {
  const auto mu = measure.moments();
  if (mu.size() < 2 * K + 1) {
    throw Error(Errc::order_exceeded,
                "degree cut " + std::to_string(K) + " needs moments up to " +
                    std::to_string(2 * K) + ", only " +
                    std::to_string(mu.size() - 1) + " stored");
  }
  RecurrenceTable t = empty_table(K);
  t.support_size = kInfiniteSupport;
  t.determinacy_checked = false;

  const std::size_t L = 2 * K + 1;
  std::vector<double> sig_prev2(L, 0.0), sig_prev(mu.begin(), mu.begin() + L),
      sig(L, 0.0);
  double alpha_prev = mu[1] / mu[0];
  double beta_prev = mu[0];
  if (K > 0) t.b[0] = alpha_prev;
  double worst_loss = 0.0;

  for (std::size_t k = 1; k <= K; ++k) {
    for (std::size_t l = k; l + k <= 2 * K; ++l) {
      const double t1 = sig_prev[l + 1];
      const double t2 = alpha_prev * sig_prev[l];
      const double t3 = beta_prev * sig_prev2[l];
      sig[l] = t1 - t2 - t3;
      if (l == k) {
        const double scale =
            std::max({std::abs(t1), std::abs(t2), std::abs(t3)});
        // Relative errors compound from step to step, so the losses add.
        if (sig[l] != 0.0 && scale > 0.0) {
          worst_loss += std::log10(scale / std::abs(sig[l]));
        }
      }
    }
    const double a_k = sig[k] / sig_prev[k - 1];
    check_breakdown(a_k, k);
    if (exhausted(a_k, t.gamma[k - 1])) {
      finish_exhausted(t, k);
      break;
    }
    t.a[k - 1] = a_k;
    t.gamma[k] = t.gamma[k - 1] * a_k;
    if (k < K) {
      const double alpha_k = sig[k + 1] / sig[k] - sig_prev[k] / sig_prev[k - 1];
      t.b[k] = alpha_k;
      alpha_prev = alpha_k;
    }
    beta_prev = a_k;
    std::swap(sig_prev2, sig_prev);
    std::swap(sig_prev, sig);
    std::fill(sig.begin(), sig.end(), 0.0);
  }
  t.digits_lost = worst_loss;
  t.ill_conditioned = worst_loss > kMaxDigitLoss;
  return t;
}

}  // namespace

double RecurrenceTable::b_at(std::size_t n) const {
  if (n < b.size()) return b[n];
  if (n >= support_size) return 0.0;
  throw Error(Errc::order_exceeded,
              "b_" + std::to_string(n) + " lies beyond the degree cut");
}

double RecurrenceTable::a_at(std::size_t n) const {
  if (n == 0) return 0.0;
  if (n <= a.size()) return a[n - 1];
  if (n >= support_size) return 0.0;
  throw Error(Errc::order_exceeded,
              "a_" + std::to_string(n) + " lies beyond the degree cut");
}

double RecurrenceTable::gamma_at(std::size_t n) const {
  if (n < gamma.size()) return gamma[n];
  if (n >= support_size) return 0.0;
  throw Error(Errc::order_exceeded,
              "gamma_" + std::to_string(n) + " lies beyond the degree cut");
}

double RecurrenceTable::max_a() const noexcept {
  double m = 0.0;
  for (double v : a) m = std::max(m, v);
  return m;
}

RecurrenceTable recurrence_coefficients(const SpectralMeasure& measure,
                                        std::size_t K) {
  if (K == 0) {
    throw Error(Errc::invalid_argument, "degree cut must be positive");
  }
  return measure.is_discrete() ? stieltjes(measure, K) : chebyshev(measure, K);
}

double evaluate_q(const RecurrenceTable& table, std::size_t k, double s) {
  if (k >= table.support_size) return 0.0;
  if (k > table.degree_cut()) {
    throw Error(Errc::order_exceeded,
                "q_" + std::to_string(k) + " lies beyond the degree cut");
  }
  double q_prev = 0.0, q = 1.0;
  for (std::size_t n = 0; n < k; ++n) {
    const double q_next = (s - table.b[n]) * q - table.a_at(n) * q_prev;
    q_prev = q;
    q = q_next;
  }
  return q;
}

std::vector<double> monomial_coefficients(const RecurrenceTable& table,
                                          std::size_t k) {
  if (k >= table.support_size) {
    throw Error(Errc::degenerate_degree,
                "q_" + std::to_string(k) +
                    " vanishes: the measure has only " +
                    std::to_string(table.support_size) + " support points");
  }
  if (k > table.degree_cut()) {
    throw Error(Errc::order_exceeded,
                "q_" + std::to_string(k) + " lies beyond the degree cut");
  }
  std::vector<double> prev, cur{1.0};
  for (std::size_t n = 0; n < k; ++n) {
    std::vector<double> next(n + 2, 0.0);
    for (std::size_t i = 0; i <= n; ++i) {
      next[i + 1] += cur[i];
      next[i] -= table.b[n] * cur[i];
    }
    const double a_n = table.a_at(n);
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= a_n * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Eigen::MatrixXd jacobi_matrix(const RecurrenceTable& table, std::size_t K) {
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(K + 1, K + 1);
  for (std::size_t n = 0; n <= K; ++n) {
    if (n >= table.support_size) break;
    J(n, n) = table.b_at(n);
    if (n < K) {
      const double off = std::sqrt(std::max(0.0, table.a_at(n + 1)));
      J(n, n + 1) = off;
      J(n + 1, n) = off;
    }
  }
  return J;
}

double max_recurrence_a(std::span<const RecurrenceTable> tables,
                        std::size_t n) {
  double m = 0.0;
  for (const RecurrenceTable& t : tables) m = std::max(m, t.a_at(n));
  return m;
}

}  // namespace levychaos
