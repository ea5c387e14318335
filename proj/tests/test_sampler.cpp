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

#include <doctest.h>

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "levychaos/error.hpp"
#include "levychaos/montecarlo.hpp"
#include "levychaos/sampler.hpp"
#include "test_util.hpp"

using namespace levychaos;
using namespace levychaos::testing;

namespace {

MeasureField field_of(const SpectralMeasure& m, std::vector<double> volumes) {
  return MeasureField::uniform(Lattice::from_volumes(volumes), m);
}

bool within(const Estimate& e, double target) {
  return std::abs(e.mean - target) <= 3.0 * e.std_error;
}

}  // namespace

TEST_CASE("counter-based streams") {
  StreamRng a(1, 2, 3, 4), b(1, 2, 3, 4), c(1, 2, 3, 5), d(2, 2, 3, 4);
  const auto first = a();
  CHECK(first == b());
  CHECK(first != c());
  CHECK(first != d());
  CHECK(a() == b());
}

TEST_CASE("moment sums") {
  MomentSums s(2);
  const double xs[] = {1.0, 2.0, 4.0, 7.0};
  for (double x : xs) {
    const double v[] = {x, x * x};
    s.add(v);
  }
  const auto e = s.estimate(0);
  CHECK(e.mean == 3.5);
  // Unbiased variance 7 over 4 samples.
  CHECK(e.std_error == doctest::Approx(std::sqrt(7.0 / 4.0)));

  MomentSums left(2), right(2);
  for (int i = 0; i < 2; ++i) {
    const double v[] = {xs[i], xs[i] * xs[i]};
    left.add(v);
  }
  for (int i = 2; i < 4; ++i) {
    const double v[] = {xs[i], xs[i] * xs[i]};
    right.add(v);
  }
  left.merge(right);
  CHECK(left.count() == 4);
  CHECK(left.estimate(1).mean == s.estimate(1).mean);
}

TEST_CASE("block accumulation is thread invariant") {
  const auto body = [](std::size_t begin, std::size_t end, MomentSums& acc) {
    for (std::size_t i = begin; i < end; ++i) {
      StreamRng rng(5, i, 0, 0);
      const double v[] = {std::ldexp(static_cast<double>(rng()), -64)};
      acc.add(v);
    }
  };
  const std::size_t n = 3 * kBlockSize + 17;
  const auto serial = accumulate_blocks(n, 1, 1, body).estimate(0);
  const auto parallel = accumulate_blocks(n, 3, 1, body).estimate(0);
  CHECK(serial.mean == parallel.mean);
  CHECK(serial.std_error == parallel.std_error);
  CHECK(within(serial, 0.5));

  CHECK_THROWS_AS(accumulate_blocks(n, 2, 1,
                                    [](std::size_t b, std::size_t, MomentSums&) {
                                      if (b > 0) throw std::runtime_error("boom");
                                    }),
                  std::runtime_error);
}

TEST_CASE("path sampling") {
  const NoiseModel gauss(field_of(SpectralMeasure::dirac(0.0), {0.5, 0.5}));
  const auto p = gauss.sample(9, 0);
  CHECK(p.jump_counts[0].empty());
  CHECK(gauss.gaussian_variance(1) == 0.5);

  const NoiseModel poisson(field_of(SpectralMeasure::dirac(1.0), {1.0}));
  CHECK(poisson.intensities(0)[0] == 1.0);
  MomentSums counts(1);
  for (std::size_t i = 0; i < 20000; ++i) {
    const auto path = poisson.sample(3, i);
    CHECK(path.gaussian[0] == 0.0);
    const double v[] = {static_cast<double>(path.jump_counts[0][0])};
    counts.add(v);
  }
  CHECK(within(counts.estimate(0), 1.0));

  const NoiseModel mixed(field_of(five_point(), {0.5, 0.25}));
  const auto x = mixed.sample(42, 1234);
  const auto y = mixed.sample(42, 1234);
  CHECK(x.gaussian == y.gaussian);
  CHECK(x.jump_counts == y.jump_counts);
  CHECK(mixed.sample(43, 1234).gaussian != x.gaussian);
  CHECK(mixed.intensities(1)[2] == doctest::Approx(0.25 * 0.15 / 4.0));

  const MeasureField moments(Lattice::uniform_1d(1, 1.0),
                             {SpectralMeasure::from_moments({1.0, 0.0, 1.0})});
  try {
    NoiseModel m(moments);
    FAIL("expected unsupported-kind");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::unsupported_kind);
  }
}

TEST_CASE("pairing") {
  const NoiseModel model(field_of(five_point(), {0.5, 0.25}));
  PathSample path;
  path.gaussian = {0.0, 0.0};
  path.jump_counts = {{0, 0, 0, 0}, {0, 0, 0, 0}};
  // Only the compensators remain: -|D| sum_r w_r / s_r.
  const double drift = -(0.2 / -1.0 + 0.25 / 1.0 + 0.15 / 2.0 + 0.1 / -0.5);
  const double phi[] = {1.0, 2.0};
  CHECK(model.pairing(path, phi) == doctest::Approx(drift * (0.5 + 0.5)));
  path.jump_counts[1][2] = 3;
  CHECK(model.cell_pairing(path, 1) == doctest::Approx(0.25 * drift + 6.0));
}

TEST_CASE("closed-form characteristic functional") {
  const auto gauss = field_of(SpectralMeasure::dirac(0.0), {0.5, 0.5});
  const std::vector<double> ones{1.0, 1.0};
  for (double theta : {-3.0, -1.0, 0.0, 0.5, 2.0}) {
    const auto v = char_functional(gauss, ones, theta);
    CHECK(v.real() == doctest::Approx(std::exp(-0.5 * theta * theta)).epsilon(1e-14));
    CHECK(v.imag() == 0.0);
  }
  const auto poisson = field_of(SpectralMeasure::dirac(1.0), {1.0});
  for (double theta : {-2.0, 0.3, 1.7}) {
    const std::complex<double> i(0.0, 1.0);
    const auto expected = std::exp(std::exp(i * theta) - i * theta - 1.0);
    const auto v = char_functional(poisson, std::vector<double>{1.0}, theta);
    CHECK(std::abs(v - expected) <= 1e-14);
  }
  CHECK(char_functional(field_of(five_point(), {0.5}), std::vector<double>{1.3}, 0.0) ==
        std::complex<double>(1.0, 0.0));

  // Across the small-argument switch the exponent stays smooth.
  const auto sigma = five_point();
  const auto five = field_of(sigma, {1.0});
  for (double theta : {9.9e-5, 1.01e-4, 4.9e-5, 5.1e-5}) {
    long double re = 0.0L, im = 0.0L;
    for (const Atom& a : sigma.atoms()) {
      const long double u = theta * a.location;
      const long double lam = a.weight / (a.location * a.location);
      re += lam * (std::cos(u) - 1.0L);
      im += lam * (std::sin(u) - u);
    }
    re -= 0.5L * 0.3L * theta * theta;
    const auto expected = std::exp(std::complex<long double>(re, im));
    const auto v = char_functional(five, std::vector<double>{1.0}, theta);
    CHECK(std::abs(v.real() - (double)expected.real()) <= 1e-15);
    CHECK(std::abs(v.imag() - (double)expected.imag()) <= 1e-18);
  }
}

TEST_CASE("Monte Carlo agrees with the closed form") {
  const NoiseModel model(field_of(five_point(), {0.25, 0.25, 0.5}));
  const std::vector<double> phi{1.0, -0.5, 0.8};
  const std::vector<double> thetas{-2.0, -0.5, 1.0, 2.5};
  const auto est = empirical_cf(model, phi, thetas, 100000, 17, 2);
  for (std::size_t t = 0; t < thetas.size(); ++t) {
    const auto target = model.char_functional(phi, thetas[t]);
    CHECK(std::abs(est[t].value - target) <= 3.0 * est[t].std_error());
  }
  const auto single = empirical_cf(model, phi, 1.0, 100000, 17, 1);
  CHECK(single.value == est[2].value);
  CHECK_THROWS_AS(empirical_cf(model, phi, 1.0, 1, 17, 1), Error);
}

TEST_CASE("pairing statistics and independence of cells") {
  const NoiseModel model(field_of(five_point(), {0.5, 0.75}));
  const std::vector<std::vector<double>> phis{{1.0, 0.0}, {0.0, 1.0}, {1.0, -2.0}};
  const auto m = empirical_pairing_moments(model, phis, 2, 200000, 5, 2);
  CHECK(within(m[0], 0.0));
  CHECK(within(m[1], 0.5));
  CHECK(within(m[3], 0.75));
  CHECK(within(m[5], 0.5 + 4.0 * 0.75));

  // Covariance of the two indicator pairings.
  const auto cov = accumulate_blocks(
      200000, 2, 1, [&](std::size_t begin, std::size_t end, MomentSums& acc) {
        PathSample path;
        for (std::size_t s = begin; s < end; ++s) {
          model.sample(5, s, path);
          const double v[] = {model.cell_pairing(path, 0) * model.cell_pairing(path, 1)};
          acc.add(v);
        }
      });
  CHECK(within(cov.estimate(0), 0.0));
}
