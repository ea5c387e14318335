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

// Acceptance suite: one PASS/FAIL line per criterion. Seeds, sample counts
// and tolerances are fixed below; a failing line is reported, never retried.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "levychaos/chaos.hpp"
#include "levychaos/error.hpp"
#include "levychaos/fock.hpp"
#include "levychaos/measure.hpp"
#include "levychaos/orthopoly.hpp"
#include "levychaos/sampler.hpp"
#include "levychaos/sym_dense.hpp"
#include "test_util.hpp"

using namespace levychaos;
using namespace levychaos::testing;

namespace {

constexpr std::uint64_t kSeed = 20261018;
constexpr std::size_t kSamples = 1000000;
constexpr double kSigmas = 3.0;

constexpr double kOrthoTol = 1e-10;
constexpr double kNormTol = 1e-10;
constexpr double kProjectionTol = 1e-12;
constexpr double kSymIsometryTol = 1e-11;
constexpr double kAdjointTol = 1e-11;
constexpr double kCommutatorTol = 1e-12;
constexpr double kWickTol = 1e-10;
constexpr double kFockNormTol = 1e-11;

constexpr double kLimitOrtho = 1.0;
constexpr double kLimitSym = 5.0;
constexpr double kLimitOperators = 5.0;
constexpr double kLimitCf = 60.0;
constexpr double kLimitChaos = 120.0;

SpectralMeasure gaussian() { return SpectralMeasure::dirac(0.0); }
SpectralMeasure poisson() { return SpectralMeasure::dirac(1.0); }

struct NamedMeasure {
  const char* name;
  SpectralMeasure measure;
};

// delta_0, (d_{-1} + d_1) / 2, d_{-1} / 4 + d_0 / 2 + d_1 / 4.
std::vector<NamedMeasure> named_measures() {
  return {{"gaussian", gaussian()},
          {"two-point", two_point()},
          {"three-point", three_point()}};
}

const std::vector<double> kCfVolumes{0.25, 0.5, 0.75, 0.5};
const std::vector<double> kChaosVolumes{0.2, 0.3, 0.25, 0.15, 0.1};

MeasureField field_on(const std::vector<double>& volumes,
                      const SpectralMeasure& m) {
  return MeasureField::uniform(Lattice::from_volumes(volumes), m);
}

// Running record of one criterion: comparisons, failures, the estimates
// produced (for the determinism replay) and the worst normalized error.
struct Tally {
  std::size_t checks = 0;
  std::size_t failures = 0;
  double worst = 0.0;
  bool finite = true;
  std::vector<double> estimates;

  void statistical(double estimate, double std_error, double target) {
    record(estimate, std_error);
    const double err = std::abs(estimate - target);
    ++checks;
    if (!(err <= kSigmas * std_error)) ++failures;
    if (std_error > 0.0) worst = std::max(worst, err / std_error);
  }
  void exact(bool ok, double error) {
    ++checks;
    if (!ok) ++failures;
    if (!std::isfinite(error)) finite = false;
    worst = std::max(worst, error);
  }
  void record(double estimate, double std_error) {
    estimates.push_back(estimate);
    estimates.push_back(std_error);
    if (!std::isfinite(estimate) || !std::isfinite(std_error)) finite = false;
  }
  void merge(const Tally& o) {
    checks += o.checks;
    failures += o.failures;
    worst = std::max(worst, o.worst);
    finite = finite && o.finite;
    estimates.insert(estimates.end(), o.estimates.begin(), o.estimates.end());
  }
  bool passed() const { return failures == 0 && finite; }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

int g_failed = 0;

void report(int id, const char* title, bool pass, const std::string& detail) {
  std::printf("[%s] criterion %d: %s: %s\n", pass ? "PASS" : "FAIL", id, title,
              detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failed;
}

std::string summary(const Tally& t, const char* worst_label) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%zu/%zu within tolerance, %s %.3g%s",
                t.checks - t.failures, t.checks, worst_label, t.worst,
                t.finite ? "" : ", non-finite values");
  return buf;
}

std::string with_time(std::string s, double secs, double limit) {
  char buf[96];
  if (limit > 0.0) {
    std::snprintf(buf, sizeof buf, ", %.2f s (limit %.0f s)", secs, limit);
  } else {
    std::snprintf(buf, sizeof buf, ", %.2f s", secs);
  }
  return s + buf;
}

// --- 1: orthogonal polynomials ---

Tally ortho_measure(const SpectralMeasure& m) {
  Tally t;
  const std::size_t degrees = std::min<std::size_t>(8, m.support_size() - 1);
  const auto table = recurrence_coefficients(m, degrees + 1);
  std::vector<double> points, weights;
  m.support(points, weights);
  auto integral = [&](std::size_t i, std::size_t j) {
    double s = 0.0;
    for (std::size_t p = 0; p < points.size(); ++p) {
      s += weights[p] * evaluate_q(table, i, points[p]) *
           evaluate_q(table, j, points[p]);
    }
    return s;
  };
  for (std::size_t i = 0; i <= degrees; ++i) {
    const double gi = table.gamma_at(i);
    const double norm = integral(i, i);
    const double rel = std::abs(norm - gi) / gi;
    t.exact(rel <= kNormTol, rel);
    for (std::size_t j = 0; j < i; ++j) {
      const double scale = std::sqrt(gi * table.gamma_at(j));
      const double off = std::abs(integral(i, j));
      t.exact(off <= kOrthoTol * scale, off / scale);
    }
  }
  return t;
}

void criterion_orthopoly() {
  const auto start = std::chrono::steady_clock::now();
  Tally t;
  Rng rng(kSeed + 1);
  for (int r = 0; r < 20; ++r) {
    t.merge(ortho_measure(random_discrete(rng, uniform_int(rng, 2, 6))));
  }
  for (const auto& nm : named_measures()) t.merge(ortho_measure(nm.measure));
  const double secs = seconds_since(start);
  report(1, "orthogonal polynomial suite", t.passed() && secs < kLimitOrtho,
         with_time(summary(t, "worst relative error"), secs, kLimitOrtho));
}

// --- 2: symmetrization and occupation numbers ---

DenseTensor random_tensor(Rng& rng, std::size_t dim, std::size_t order) {
  DenseTensor d(dim, order);
  for (double& x : d.data()) x = uniform(rng, -1.0, 1.0);
  return d;
}

// `count` mutually orthogonal random vectors of random length.
std::vector<OneParticleVector> orthogonal_vectors(Rng& rng, std::size_t dim,
                                                  std::size_t count) {
  std::vector<OneParticleVector> out;
  while (out.size() < count) {
    OneParticleVector v{random_vector(rng, dim)};
    for (const auto& u : out) {
      const double c = inner(u, v) / inner(u, u);
      for (std::size_t i = 0; i < dim; ++i) v.coefficients[i] -= c * u[i];
    }
    const double n = std::sqrt(inner(v, v));
    if (n < 1e-3) continue;
    const double scale = uniform(rng, 0.5, 2.0) / n;
    for (double& x : v.coefficients) x *= scale;
    out.push_back(v);
  }
  return out;
}

double factorial(std::size_t n) {
  double f = 1.0;
  for (std::size_t k = 2; k <= n; ++k) f *= static_cast<double>(k);
  return f;
}

void criterion_sym() {
  const auto start = std::chrono::steady_clock::now();
  Tally projection, isometry;
  Rng rng(kSeed + 2);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t order = uniform_int(rng, 1, kMaxDenseOrder);
    const std::size_t dim = uniform_int(rng, 1, 6);
    const auto x = random_tensor(rng, dim, order);
    const auto y = random_tensor(rng, dim, order);
    const auto sx = sym_project(x);
    const auto ssx = sym_project(sx);
    double idem = 0.0;
    for (std::size_t i = 0; i < sx.data().size(); ++i) {
      idem = std::max(idem, std::abs(ssx.data()[i] - sx.data()[i]));
    }
    projection.exact(idem <= kProjectionTol, idem);
    const double adj = std::abs(inner(sx, y) - inner(x, sym_project(y)));
    projection.exact(adj <= kProjectionTol, adj);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = uniform_int(rng, 1, kMaxDenseOrder);
    std::vector<std::size_t> alpha;
    for (std::size_t left = n; left > 0;) {
      alpha.push_back(uniform_int(rng, 1, left));
      left -= alpha.back();
    }
    const std::size_t dim = uniform_int(rng, alpha.size(), 6);
    const auto fs = orthogonal_vectors(rng, dim, alpha.size());
    std::vector<OneParticleVector> factors;
    double expected = 1.0;
    for (std::size_t b = 0; b < alpha.size(); ++b) {
      expected *= factorial(alpha[b]) * std::pow(inner(fs[b], fs[b]), alpha[b]);
      for (std::size_t c = 0; c < alpha[b]; ++c) factors.push_back(fs[b]);
    }
    const auto s = sym_project_dense({factors});
    const double dense = inner(s, s) * factorial(n);
    double rel = std::abs(dense - expected) / expected;
    isometry.exact(rel <= kSymIsometryTol, rel);

    // The occupation-basis state built by creation operators has the same
    // norm.
    auto state = FockVector::vacuum(n);
    for (const auto& f : factors) state = create(f, state);
    rel = std::abs(norm_sq(state) - expected) / expected;
    isometry.exact(rel <= kSymIsometryTol, rel);
  }
  const double secs = seconds_since(start);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "projection %zu/%zu (worst %.3g), isometry %zu/%zu (worst "
                "relative %.3g)",
                projection.checks - projection.failures, projection.checks,
                projection.worst, isometry.checks - isometry.failures,
                isometry.checks, isometry.worst);
  report(2, "Sym/occupation suite",
         projection.passed() && isometry.passed() && secs < kLimitSym,
         with_time(buf, secs, kLimitSym));
}

// --- 3: operator algebra ---

void criterion_operators() {
  const auto start = std::chrono::steady_clock::now();
  Tally adjoint, commutator, wick;
  Rng rng(kSeed + 3);
  constexpr std::size_t kCut = 4;
  constexpr std::size_t kParticles = 4;
  // Every cell keeps all its degrees, so the operators act exactly.
  const std::vector<MeasureField> fields{
      MeasureField(Lattice::from_volumes(std::vector<double>{0.5, 1.25}),
                   {five_point(), three_point()}),
      field_on({0.75, 0.25, 1.0}, two_point()),
      MeasureField(Lattice::from_volumes(std::vector<double>{0.4, 0.6}),
                   {poisson(), gaussian()})};
  for (const auto& field : fields) {
    const ModeBasis basis(field, kCut);
    const std::size_t modes = basis.mode_count();
    const std::size_t cells = field.cell_count();
    for (int trial = 0; trial < 20; ++trial) {
      const auto phi = random_vector(rng, cells);
      const auto u = random_fock(rng, modes, kParticles - 1, kParticles, 10);
      const auto v = random_fock(rng, modes, kParticles - 1, kParticles, 10);
      std::vector<OperatorSpec> ops{OperatorSpec::A(phi)};
      for (std::size_t k = 1; k <= 3; ++k) ops.push_back(OperatorSpec::A_k(phi, k));
      for (std::size_t k = 0; k <= 3; ++k) ops.push_back(OperatorSpec::R_k(phi, k));
      for (const auto& op : ops) {
        const double lhs = inner(apply(basis, op, u), v);
        const double rhs = inner(u, apply(basis, op, v));
        const double err = std::abs(lhs - rhs) / std::max(1.0, std::abs(lhs));
        adjoint.exact(err <= kAdjointTol, err);
      }

      const OneParticleVector f{random_vector(rng, modes)};
      const OneParticleVector g{random_vector(rng, modes)};
      const auto w = random_fock(rng, modes, kParticles - 1, kParticles, 10);
      const auto lhs = annihilate(f, create(g, w)) - create(g, annihilate(f, w));
      const auto rhs = inner(f, g) * w;
      const double err = std::sqrt(norm_sq(lhs - rhs)) /
                         std::max(1.0, std::sqrt(norm_sq(rhs)));
      commutator.exact(err <= kCommutatorTol, err);
    }
  }

  const auto gauss = field_on({0.5, 0.25, 0.25}, gaussian());
  const ModeBasis gbasis(gauss, 2);
  for (int trial = 0; trial < 5; ++trial) {
    const auto phi = random_vector(rng, 3);
    double phi_sq = 0.0;
    for (std::size_t j = 0; j < 3; ++j) phi_sq += phi[j] * phi[j] * gauss.lattice().volume(j);
    double double_factorial = 1.0;
    for (std::size_t m = 1; m <= 3; ++m) {
      double_factorial *= 2.0 * static_cast<double>(m) - 1.0;
      const std::vector<OperatorSpec> ops(2 * m, OperatorSpec::A(phi));
      const double expected = double_factorial * std::pow(phi_sq, m);
      const double rel =
          std::abs(vacuum_moment(gbasis, ops, 2 * m) - expected) / expected;
      wick.exact(rel <= kWickTol, rel);
    }
  }
  const double secs = seconds_since(start);
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "adjointness %zu/%zu (worst %.3g), commutator %zu/%zu (worst "
                "%.3g), Gaussian moments %zu/%zu (worst relative %.3g)",
                adjoint.checks - adjoint.failures, adjoint.checks, adjoint.worst,
                commutator.checks - commutator.failures, commutator.checks,
                commutator.worst, wick.checks - wick.failures, wick.checks,
                wick.worst);
  report(3, "operator algebra suite",
         adjoint.passed() && commutator.passed() && wick.passed() &&
             secs < kLimitOperators,
         with_time(buf, secs, kLimitOperators));
}

// --- 4..7: Monte Carlo criteria, parameterized by measure and threads ---

const std::vector<double> kCfPhi{1.0, -0.5, 0.8, 0.3};

std::vector<double> theta_grid() {
  std::vector<double> t;
  for (int i = -6; i <= 6; ++i) t.push_back(0.5 * i);
  return t;
}

Tally cf_check(const SpectralMeasure& m, std::uint64_t seed,
               std::size_t threads) {
  Tally t;
  const NoiseModel model(field_on(kCfVolumes, m));
  const auto thetas = theta_grid();
  const auto est = empirical_cf(model, kCfPhi, thetas, kSamples, seed, threads);
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto exact = model.char_functional(kCfPhi, thetas[i]);
    t.record(est[i].value.real(), est[i].stderr_re);
    t.record(est[i].value.imag(), est[i].stderr_im);
    const double err = std::abs(est[i].value - exact);
    const double se = est[i].std_error();
    ++t.checks;
    if (!(err <= kSigmas * se)) ++t.failures;
    if (se > 0.0) t.worst = std::max(t.worst, err / se);
  }
  return t;
}

std::vector<std::vector<double>> moment_phis() {
  return {{1.0, 1.0, 1.0, 1.0}, {1.0, -0.5, 1.0, -0.5}};
}

Tally moment_check(const SpectralMeasure& m, std::uint64_t seed,
                   std::size_t threads) {
  constexpr std::size_t kMaxPower = 4;
  Tally t;
  const auto field = field_on(kCfVolumes, m);
  const NoiseModel model(field);
  const ModeBasis basis(field, kMaxPower);
  const auto phis = moment_phis();
  const auto est = empirical_pairing_moments(model, phis, kMaxPower, kSamples,
                                             seed, threads);
  for (std::size_t p = 0; p < phis.size(); ++p) {
    for (std::size_t n = 1; n <= kMaxPower; ++n) {
      const std::vector<OperatorSpec> ops(n, OperatorSpec::A(phis[p]));
      const double target = vacuum_moment(basis, ops, kMaxPower);
      const auto& e = est[p * kMaxPower + (n - 1)];
      t.statistical(e.mean, e.std_error, target);
    }
  }
  return t;
}

Tally teugels_check(const SpectralMeasure& m, std::uint64_t seed,
                    std::size_t threads) {
  constexpr std::size_t kMaxDegree = 3;
  constexpr std::size_t kCell = 1;
  Tally t;
  const auto field = field_on(kCfVolumes, m);
  const ChaosEvaluator eval(field, kMaxDegree + 1);
  const auto cov =
      estimate_teugels(eval, kCell, kMaxDegree, kSamples, seed, threads);
  const double vol = field.lattice().volume(kCell);
  const auto& table = eval.table(kCell);
  const std::size_t width = kMaxDegree + 1;
  for (std::size_t k = 0; k <= kMaxDegree; ++k) {
    for (std::size_t l = k; l <= kMaxDegree; ++l) {
      const auto& y = cov.y[k * width + l];
      t.statistical(y.mean, y.std_error, vol * moment(m, k + l));
      const auto& z = cov.z[k * width + l];
      t.statistical(z.mean, z.std_error, k == l ? vol * table.gamma_at(k) : 0.0);
    }
  }
  return t;
}

std::vector<ChaosIndex> chaos_indices() {
  return {ChaosIndex({1}), ChaosIndex({2}), ChaosIndex({0, 1}),
          ChaosIndex({1, 1}), ChaosIndex({2, 1})};
}

struct ChaosTally {
  Tally stat;
  Tally fock;
  std::size_t indices = 0;
};

ChaosTally chaos_check(const SpectralMeasure& m, std::uint64_t seed,
                       std::size_t threads) {
  constexpr std::size_t kCut = 2;
  constexpr std::size_t kParticles = 3;
  ChaosTally out;
  const auto field = field_on(kChaosVolumes, m);
  const ModeBasis basis(field, kCut);
  const ChaosEvaluator eval(field, kCut);
  std::vector<ChaosCoefficient> coeffs;
  for (const auto& alpha : chaos_indices()) {
    // Clip to the degrees the measure carries.
    if (alpha.max_degree() >= m.support_size() || alpha.max_degree() > kCut ||
        alpha.order() > kParticles) {
      continue;
    }
    coeffs.push_back(random_coefficient(alpha, kChaosVolumes.size(),
                                        seed ^ (0x9E3779B97F4A7C15ULL *
                                                (coeffs.size() + 1))));
  }
  out.indices = coeffs.size();
  for (const auto& f : coeffs) {
    const double target = g_norm_sq(basis, f);
    const double rel = std::abs(norm_sq(kmap_fock(basis, f, kParticles)) - target) /
                       target;
    out.fock.exact(rel <= kFockNormTol, rel);
  }
  const auto gram = estimate_gram(eval, coeffs, kSamples, seed, threads);
  std::size_t pos = 0;
  for (std::size_t a = 0; a < coeffs.size(); ++a) {
    for (std::size_t b = a; b < coeffs.size(); ++b, ++pos) {
      const double target = a == b ? g_norm_sq(basis, coeffs[a]) : 0.0;
      out.stat.statistical(gram[pos].mean, gram[pos].std_error, target);
    }
  }
  return out;
}

// One pass over criteria 4..7 with a thread count; the estimates feed the
// determinism comparison.
struct MonteCarloRun {
  Tally cf, moments, teugels;
  ChaosTally chaos;
  double cf_secs = 0.0, moments_secs = 0.0, teugels_secs = 0.0,
         chaos_secs = 0.0;

  std::vector<double> estimates() const {
    std::vector<double> all;
    for (const Tally* t : {&cf, &moments, &teugels, &chaos.stat}) {
      all.insert(all.end(), t->estimates.begin(), t->estimates.end());
    }
    return all;
  }
};

MonteCarloRun monte_carlo_run(std::size_t threads) {
  MonteCarloRun r;
  auto start = std::chrono::steady_clock::now();
  const auto named = named_measures();
  for (std::size_t i = 0; i < named.size(); ++i) {
    r.cf.merge(cf_check(named[i].measure, kSeed + 40 + i, threads));
  }
  r.cf_secs = seconds_since(start);

  const auto rich = five_point();
  start = std::chrono::steady_clock::now();
  r.moments = moment_check(rich, kSeed + 50, threads);
  r.moments_secs = seconds_since(start);
  start = std::chrono::steady_clock::now();
  r.teugels = teugels_check(rich, kSeed + 60, threads);
  r.teugels_secs = seconds_since(start);
  start = std::chrono::steady_clock::now();
  r.chaos = chaos_check(rich, kSeed + 70, threads);
  r.chaos_secs = seconds_since(start);
  return r;
}

void report_monte_carlo(const MonteCarloRun& r) {
  report(4, "characteristic functional",
         r.cf.passed() && r.cf_secs < kLimitCf,
         with_time(summary(r.cf, "max |err|/stderr"), r.cf_secs, kLimitCf));
  report(5, "moment bridge", r.moments.passed(),
         with_time(summary(r.moments, "max |err|/stderr"), r.moments_secs, 0));
  report(6, "Teugels/Z covariances", r.teugels.passed(),
         with_time(summary(r.teugels, "max |err|/stderr"), r.teugels_secs, 0));
  char buf[320];
  std::snprintf(buf, sizeof buf,
                "%zu indices, covariances %s; Fock norms %zu/%zu (worst "
                "relative %.3g)",
                r.chaos.indices,
                summary(r.chaos.stat, "max |err|/stderr").c_str(),
                r.chaos.fock.checks - r.chaos.fock.failures,
                r.chaos.fock.checks, r.chaos.fock.worst);
  report(7, "chaos isometry",
         r.chaos.stat.passed() && r.chaos.fock.passed() &&
             r.chaos_secs < kLimitChaos,
         with_time(buf, r.chaos_secs, kLimitChaos));
}

// --- 8: degenerate supports ---

void criterion_degenerate() {
  const auto start = std::chrono::steady_clock::now();
  const NamedMeasure cases[] = {{"poisson", poisson()},
                                {"two-point", two_point()}};
  bool pass = true;
  std::string detail;
  for (std::size_t i = 0; i < 2; ++i) {
    const auto& m = cases[i].measure;
    const std::uint64_t seed = kSeed + 80 + 10 * i;
    std::string part = std::string(cases[i].name) + ": ";
    try {
      const auto cf = cf_check(m, seed, 1);
      const auto mom = moment_check(m, seed + 1, 1);
      const auto teu = teugels_check(m, seed + 2, 1);
      const auto chaos = chaos_check(m, seed + 3, 1);
      const bool ok = cf.passed() && mom.passed() && teu.passed() &&
                      chaos.stat.passed() && chaos.fock.passed();
      pass = pass && ok;
      char buf[256];
      std::snprintf(buf, sizeof buf,
                    "cf %zu/%zu, moments %zu/%zu, covariances %zu/%zu, chaos "
                    "%zu indices %zu/%zu, fock %zu/%zu",
                    cf.checks - cf.failures, cf.checks,
                    mom.checks - mom.failures, mom.checks,
                    teu.checks - teu.failures, teu.checks, chaos.indices,
                    chaos.stat.checks - chaos.stat.failures, chaos.stat.checks,
                    chaos.fock.checks - chaos.fock.failures, chaos.fock.checks);
      part += buf;
    } catch (const std::exception& e) {
      pass = false;
      part += std::string("error: ") + e.what();
    }
    detail += (i ? "; " : "") + part;
  }
  report(8, "degenerate-support robustness", pass,
         with_time(detail, seconds_since(start), 0));
}

// --- 9: determinism ---

void criterion_determinism(const MonteCarloRun& serial) {
  const auto start = std::chrono::steady_clock::now();
  const auto parallel = monte_carlo_run(4);
  const auto a = serial.estimates();
  const auto b = parallel.estimates();
  const bool same = a.size() == b.size() &&
                    std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
  std::size_t differing = 0;
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    if (std::memcmp(&a[i], &b[i], sizeof(double)) != 0) ++differing;
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "%zu estimates compared between 1 and 4 threads, %zu differ",
                a.size(), differing + (a.size() > b.size() ? a.size() - b.size()
                                                           : b.size() - a.size()));
  report(9, "determinism", same, with_time(buf, seconds_since(start), 0));
}

}  // namespace

int main() {
  std::printf("acceptance: seed %llu, %zu samples per Monte Carlo estimate\n",
              static_cast<unsigned long long>(kSeed), kSamples);
  std::fflush(stdout);
  try {
    criterion_orthopoly();
    criterion_sym();
    criterion_operators();
    const auto serial = monte_carlo_run(1);
    report_monte_carlo(serial);
    criterion_degenerate();
    criterion_determinism(serial);
  } catch (const std::exception& e) {
    std::printf("[FAIL] aborted: %s\n", e.what());
    return 1;
  }
  std::printf("acceptance: %d criteria failed\n", g_failed);
  return g_failed == 0 ? 0 : 1;
}
