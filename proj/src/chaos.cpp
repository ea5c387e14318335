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

#include "levychaos/chaos.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

// Full ordered tuples of a coefficient, flattened: tuple t occupies
// cells[t * order .. (t + 1) * order).
struct ExpandedCoefficient {
  std::size_t order = 0;
  std::vector<std::size_t> degrees;
  std::vector<std::uint32_t> cells;
  std::vector<double> values;
};

ExpandedCoefficient expand(const ChaosCoefficient& f) {
  ExpandedCoefficient e;
  e.order = f.index().order();
  for (std::size_t p = 0; p < e.order; ++p) {
    e.degrees.push_back(f.index().degree_at(p));
  }
  f.for_each_full_tuple([&](std::span<const std::uint32_t> t, double v) {
    e.cells.insert(e.cells.end(), t.begin(), t.end());
    e.values.push_back(v);
  });
  return e;
}

double integral_from_z(const std::vector<std::vector<double>>& z,
                       const ExpandedCoefficient& e) {
  double total = 0.0;
  for (std::size_t t = 0; t < e.values.size(); ++t) {
    double prod = e.values[t];
    const std::uint32_t* cells = e.cells.data() + t * e.order;
    for (std::size_t p = 0; p < e.order; ++p) prod *= z[cells[p]][e.degrees[p]];
    total += prod;
  }
  return total;
}

std::size_t max_degree_of(std::span<const ChaosCoefficient> coeffs) {
  std::size_t d = 0;
  for (const auto& f : coeffs) d = std::max(d, f.index().max_degree());
  return d;
}

void check_samples(std::size_t samples) {
  if (samples < 2) {
    throw Error(Errc::invalid_argument,
                "Monte Carlo estimates need at least 2 samples");
  }
}

}  // namespace

// --- ChaosIndex ------------------------------------------------------------

ChaosIndex::ChaosIndex(std::vector<std::size_t> counts)
    : counts_(std::move(counts)) {
  while (!counts_.empty() && counts_.back() == 0) counts_.pop_back();
  for (std::size_t c : counts_) order_ += c;
}

std::size_t ChaosIndex::max_degree() const noexcept {
  return counts_.empty() ? 0 : counts_.size() - 1;
}

std::size_t ChaosIndex::degree_at(std::size_t position) const {
  std::size_t end = 0;
  for (std::size_t n = 0; n < counts_.size(); ++n) {
    end += counts_[n];
    if (position < end) return n;
  }
  throw Error(Errc::invalid_argument, "tuple position beyond |alpha|");
}

double ChaosIndex::factorial_product() const {
  double p = 1.0;
  for (std::size_t c : counts_) {
    for (std::size_t i = 2; i <= c; ++i) p *= static_cast<double>(i);
  }
  return p;
}

// --- ChaosCoefficient ------------------------------------------------------

ChaosCoefficient ChaosCoefficient::constant(double c) {
  ChaosCoefficient f{ChaosIndex{}};
  f.values_[{}] = c;
  return f;
}

ChaosCoefficient::CellTuple ChaosCoefficient::canonical(
    std::span<const std::uint32_t> cells) const {
  if (cells.size() != index_.order()) {
    throw Error(Errc::invalid_argument,
                "tuple has " + std::to_string(cells.size()) +
                    " cells, index order is " +
                    std::to_string(index_.order()));
  }
  CellTuple t(cells.begin(), cells.end());
  CellTuple sorted = t;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(Errc::repeated_cell,
                "chaos coefficients live off the diagonal; a tuple repeats a "
                "cell");
  }
  std::size_t begin = 0;
  for (std::size_t c : index_.counts()) {
    std::sort(t.begin() + begin, t.begin() + begin + c);
    begin += c;
  }
  return t;
}

void ChaosCoefficient::set(std::span<const std::uint32_t> cells, double value) {
  CellTuple key = canonical(cells);
  if (value == 0.0) {
    values_.erase(key);
  } else {
    values_[std::move(key)] = value;
  }
}

double ChaosCoefficient::at(std::span<const std::uint32_t> cells) const {
  const auto it = values_.find(canonical(cells));
  return it == values_.end() ? 0.0 : it->second;
}

void ChaosCoefficient::for_each_full_tuple(
    const std::function<void(std::span<const std::uint32_t>, double)>& fn)
    const {
  std::vector<std::size_t> block_begin;
  std::size_t begin = 0;
  for (std::size_t c : index_.counts()) {
    block_begin.push_back(begin);
    begin += c;
  }
  const auto counts = index_.counts();
  for (const auto& [rep, value] : values_) {
    CellTuple t = rep;
    // Odometer over in-block permutations; each block starts sorted, so
    // next_permutation visits every ordering exactly once.
    std::function<void(std::size_t)> walk = [&](std::size_t block) {
      if (block == counts.size()) {
        fn(t, value);
        return;
      }
      auto first = t.begin() + block_begin[block];
      auto last = first + counts[block];
      do {
        walk(block + 1);
      } while (std::next_permutation(first, last));
    };
    walk(0);
  }
}

ChaosCoefficient random_coefficient(const ChaosIndex& index, std::size_t cells,
                                    std::uint64_t seed) {
  ChaosCoefficient f(index);
  const std::size_t n = index.order();
  if (n > cells) {
    throw Error(Errc::invalid_argument,
                "index order exceeds the number of cells");
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(-1.0, 1.0);
  std::vector<std::uint32_t> t(n, 0);
  std::vector<std::size_t> block_end;
  std::size_t end = 0;
  for (std::size_t c : index.counts()) block_end.push_back(end += c);

  auto canonical_distinct = [&] {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = 0; q < p; ++q) {
        if (t[p] == t[q]) return false;
      }
    }
    std::size_t begin = 0;
    for (std::size_t e : block_end) {
      for (std::size_t p = begin + 1; p < e; ++p) {
        if (t[p - 1] > t[p]) return false;
      }
      begin = e;
    }
    return true;
  };
  for (;;) {
    if (canonical_distinct()) f.set(t, unif(rng));
    std::size_t p = n;
    while (p > 0) {
      --p;
      if (++t[p] < cells) break;
      t[p] = 0;
      if (p == 0) return f;
    }
    if (n == 0) return f;
  }
}

// --- norms and the Fock-side image -----------------------------------------

double g_inner(const ModeBasis& basis, const ChaosCoefficient& f,
               const ChaosCoefficient& g) {
  if (f.index() != g.index()) return 0.0;
  const ChaosIndex& alpha = f.index();
  double sum = 0.0;
  f.for_each_full_tuple([&](std::span<const std::uint32_t> t, double v) {
    const double w = g.at(t);
    if (w == 0.0) return;
    double weight = 1.0;
    for (std::size_t p = 0; p < t.size(); ++p) {
      weight *= basis.volume(t[p]) * basis.table(t[p]).gamma_at(alpha.degree_at(p));
    }
    sum += v * w * weight;
  });
  return alpha.factorial_product() * sum;
}

double g_norm_sq(const ModeBasis& basis, const ChaosCoefficient& f) {
  return g_inner(basis, f, f);
}

FockVector kmap_fock(const ModeBasis& basis, const ChaosCoefficient& f,
                     std::size_t truncation) {
  const ChaosIndex& alpha = f.index();
  if (alpha.order() > truncation) {
    throw Error(Errc::truncation_overflow,
                "|alpha| = " + std::to_string(alpha.order()) +
                    " exceeds particle truncation N=" +
                    std::to_string(truncation));
  }
  FockVector out(truncation);
  f.for_each_full_tuple([&](std::span<const std::uint32_t> t, double v) {
    std::vector<std::uint32_t> modes;
    modes.reserve(t.size());
    double amp = v;
    for (std::size_t p = 0; p < t.size(); ++p) {
      const std::size_t cell = t[p];
      if (cell >= basis.cell_count()) {
        throw Error(Errc::invalid_argument, "tuple cell outside the lattice");
      }
      const std::size_t degree = alpha.degree_at(p);
      if (!basis.has_mode(cell, degree)) {
        if (basis.truncated(cell)) {
          throw Error(Errc::truncation_overflow,
                      "degree " + std::to_string(degree) +
                          " lies beyond K=" +
                          std::to_string(basis.degree_cut()));
        }
        return;  // q_degree vanishes on this cell
      }
      const std::size_t m = basis.mode_index(cell, degree);
      amp *= std::sqrt(basis.mode_norm(m));
      modes.push_back(static_cast<std::uint32_t>(m));
    }
    const Occupation occ(std::move(modes));
    out.add(occ, amp * symmetric_product_amplitude(occ));
  });
  out.prune();
  return out;
}

// --- pathwise side ---------------------------------------------------------

ChaosEvaluator::ChaosEvaluator(const MeasureField& field,
                               std::size_t degree_cut)
    : degree_cut_(degree_cut), noise_(field) {
  const std::size_t M = field.cell_count();
  tables_.reserve(M);
  monomials_.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    tables_.push_back(recurrence_coefficients(field.measure(j), degree_cut));
    const RecurrenceTable& t = tables_.back();
    for (std::size_t k = 0; k <= degree_cut && k < t.support_size; ++k) {
      monomials_[j].push_back(monomial_coefficients(t, k));
    }
  }
}

double ChaosEvaluator::evaluate_Y(const PathSample& path, std::size_t cell,
                                  std::size_t k) const {
  if (k == 0) return noise_.cell_pairing(path, cell);
  const auto sizes = noise_.jump_sizes(cell);
  const auto lambda = noise_.intensities(cell);
  const auto& counts = path.jump_counts[cell];
  double y = 0.0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const double power = std::pow(sizes[r], static_cast<double>(k + 1));
    y += power * (static_cast<double>(counts[r]) - lambda[r]);
  }
  return y;
}

double ChaosEvaluator::evaluate_Z(const PathSample& path, std::size_t cell,
                                  std::size_t k) const {
  const RecurrenceTable& t = tables_.at(cell);
  if (k >= t.support_size) {
    throw Error(Errc::degenerate_degree,
                "Z^(" + std::to_string(k) + ") vanishes on cell " +
                    std::to_string(cell) + " (support size " +
                    std::to_string(t.support_size) + ")");
  }
  if (k > degree_cut_) {
    throw Error(Errc::order_exceeded,
                "Z^(" + std::to_string(k) + ") lies beyond the degree cut");
  }
  const auto& coeffs = monomials_[cell][k];
  double z = 0.0;
  for (std::size_t i = 0; i <= k; ++i) z += coeffs[i] * evaluate_Y(path, cell, i);
  return z;
}

void ChaosEvaluator::evaluate_Z_table(
    const PathSample& path, std::size_t max_degree,
    std::vector<std::vector<double>>& out) const {
  const std::size_t M = noise_.cell_count();
  out.resize(M);
  std::vector<double> y(max_degree + 1);
  for (std::size_t j = 0; j < M; ++j) {
    out[j].assign(max_degree + 1, 0.0);
    const std::size_t usable = monomials_[j].size();
    if (max_degree >= usable && tables_[j].support_size > usable) {
      throw Error(Errc::order_exceeded,
                  "Z^(" + std::to_string(max_degree) +
                      ") lies beyond the degree cut");
    }
    for (std::size_t i = 0; i <= max_degree; ++i) y[i] = evaluate_Y(path, j, i);
    for (std::size_t k = 0; k <= max_degree && k < usable; ++k) {
      const auto& coeffs = monomials_[j][k];
      double z = 0.0;
      for (std::size_t i = 0; i <= k; ++i) z += coeffs[i] * y[i];
      out[j][k] = z;
    }
  }
}

double ChaosEvaluator::multiple_integral(const PathSample& path,
                                         const ChaosCoefficient& f) const {
  std::vector<std::vector<double>> z;
  evaluate_Z_table(path, f.index().max_degree(), z);
  return integral_from_z(z, expand(f));
}

double evaluate_Y(const ChaosEvaluator& eval, const PathSample& path,
                  std::size_t cell, std::size_t k) {
  return eval.evaluate_Y(path, cell, k);
}

double evaluate_Z(const ChaosEvaluator& eval, const PathSample& path,
                  std::size_t cell, std::size_t k) {
  return eval.evaluate_Z(path, cell, k);
}

double evaluate_multiple_integral(const ChaosEvaluator& eval,
                                  const PathSample& path,
                                  const ChaosCoefficient& f) {
  return eval.multiple_integral(path, f);
}

std::vector<Estimate> estimate_gram(const ChaosEvaluator& eval,
                                    std::span<const ChaosCoefficient> coeffs,
                                    std::size_t samples, std::uint64_t seed,
                                    std::size_t threads) {
  check_samples(samples);
  std::vector<ExpandedCoefficient> expanded;
  for (const auto& f : coeffs) {
    for (std::uint32_t cell : expand(f).cells) {
      if (cell >= eval.noise().cell_count()) {
        throw Error(Errc::invalid_argument, "tuple cell outside the lattice");
      }
    }
    expanded.push_back(expand(f));
  }
  const std::size_t F = coeffs.size();
  const std::size_t Q = F * (F + 1) / 2;
  const std::size_t max_degree = max_degree_of(coeffs);
  const MomentSums sums = accumulate_blocks(
      samples, threads, Q,
      [&](std::size_t begin, std::size_t end, MomentSums& acc) {
        PathSample path;
        std::vector<std::vector<double>> z;
        std::vector<double> k_values(F), products(Q);
        for (std::size_t s = begin; s < end; ++s) {
          eval.noise().sample(seed, s, path);
          eval.evaluate_Z_table(path, max_degree, z);
          for (std::size_t a = 0; a < F; ++a) {
            k_values[a] = integral_from_z(z, expanded[a]);
          }
          std::size_t q = 0;
          for (std::size_t a = 0; a < F; ++a) {
            for (std::size_t b = a; b < F; ++b) {
              products[q++] = k_values[a] * k_values[b];
            }
          }
          acc.add(products);
        }
      });
  return sums.estimates();
}

Estimate mc_verify(const ChaosEvaluator& eval, const ChaosCoefficient& f,
                   const ChaosCoefficient& g, std::size_t samples,
                   std::uint64_t seed, std::size_t threads) {
  const ChaosCoefficient pair[] = {f, g};
  return estimate_gram(eval, pair, samples, seed, threads)[1];
}

TeugelsCovariances estimate_teugels(const ChaosEvaluator& eval,
                                    std::size_t cell, std::size_t max_degree,
                                    std::size_t samples, std::uint64_t seed,
                                    std::size_t threads) {
  check_samples(samples);
  if (cell >= eval.noise().cell_count()) {
    throw Error(Errc::invalid_argument, "cell outside the lattice");
  }
  const std::size_t D = max_degree + 1;
  const std::size_t usable = std::min(
      {D, eval.table(cell).support_size, eval.degree_cut() + 1});
  const MomentSums sums = accumulate_blocks(
      samples, threads, 2 * D * D,
      [&](std::size_t begin, std::size_t end, MomentSums& acc) {
        PathSample path;
        std::vector<double> y(D), z(D), values(2 * D * D);
        for (std::size_t s = begin; s < end; ++s) {
          eval.noise().sample(seed, s, path);
          for (std::size_t k = 0; k < D; ++k) {
            y[k] = eval.evaluate_Y(path, cell, k);
            z[k] = k < usable ? eval.evaluate_Z(path, cell, k) : 0.0;
          }
          for (std::size_t k = 0; k < D; ++k) {
            for (std::size_t l = 0; l < D; ++l) {
              values[k * D + l] = y[k] * y[l];
              values[D * D + k * D + l] = z[k] * z[l];
            }
          }
          acc.add(values);
        }
      });
  TeugelsCovariances out;
  const auto all = sums.estimates();
  out.y.assign(all.begin(), all.begin() + D * D);
  out.z.assign(all.begin() + D * D, all.end());
  return out;
}

}  // namespace levychaos
