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

#include "levychaos/error.hpp"
#include "levychaos/lattice.hpp"
#include "levychaos/measure.hpp"
#include "test_util.hpp"

using namespace levychaos;
using namespace levychaos::testing;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc{};
}

}  // namespace

TEST_CASE("lattice validates boxes") {
  const Lattice l = Lattice::from_volumes(std::vector<double>{0.5, 0.25, 1.0});
  CHECK(l.cell_count() == 3);
  CHECK(l.volume(1) == 0.25);
  CHECK(l.cell(2).lo[0] == doctest::Approx(0.75));

  CHECK(code_of([] { Lattice::from_volumes(std::vector<double>{1.0, 0.0}); }) ==
        Errc::invalid_argument);
  CHECK(code_of([] { Lattice(1, {{{0.0}, {1.0}}, {{0.5}, {1.5}}}); }) ==
        Errc::invalid_argument);
  CHECK(code_of([] { Lattice(2, {{{0.0}, {1.0}}}); }) == Errc::invalid_argument);

  const Lattice grid(2, {{{0.0, 0.0}, {1.0, 2.0}}, {{1.0, 0.0}, {2.0, 0.5}}});
  CHECK(grid.volume(0) == 2.0);
  CHECK(grid.volume(1) == 0.5);
}

TEST_CASE("discrete measure invariants") {
  CHECK(code_of([] { SpectralMeasure::discrete(0.5, {{1.0, 0.4}}); }) ==
        Errc::invalid_measure);
  CHECK(code_of([] { SpectralMeasure::discrete(0.5, {{0.0, 0.5}}); }) ==
        Errc::invalid_measure);
  CHECK(code_of([] {
          SpectralMeasure::discrete(0.0, {{1.0, 0.5}, {1.0, 0.5}});
        }) == Errc::invalid_measure);
  CHECK(code_of([] { SpectralMeasure::discrete(0.0, {{1.0, 1.5}, {2.0, -0.5}}); }) ==
        Errc::invalid_measure);
  CHECK(code_of([] { SpectralMeasure::discrete(1.2, {}); }) ==
        Errc::invalid_measure);

  const auto m = five_point();
  CHECK(m.support_size() == 5);
  std::vector<double> pts, w;
  m.support(pts, w);
  CHECK(pts.size() == 5);
  CHECK(pts[0] == 0.0);
  CHECK(w[0] == 0.3);
  CHECK(SpectralMeasure::dirac(0.0).support_size() == 1);
  CHECK(SpectralMeasure::dirac(1.0).zero_weight() == 0.0);
}

TEST_CASE("moment sequence invariants") {
  CHECK(code_of([] { SpectralMeasure::from_moments({0.9, 0.0, 1.0}); }) ==
        Errc::invalid_measure);
  // m2 < m1^2 makes the 2x2 Hankel matrix indefinite.
  CHECK(code_of([] { SpectralMeasure::from_moments({1.0, 1.0, 0.5}); }) ==
        Errc::invalid_measure);
  const auto gauss = SpectralMeasure::from_moments({1.0, 0.0, 0.0, 0.0, 0.0});
  CHECK(gauss.max_moment_order() == 4);
  CHECK(gauss.support_size() == SIZE_MAX);
  CHECK(moment(gauss, 4) == 0.0);
  CHECK(code_of([&] { moment(gauss, 5); }) == Errc::order_exceeded);
  CHECK(code_of([&] { fit_moment_bound(gauss, 3); }) == Errc::unsupported_kind);
  CHECK(code_of([&] { levy_decomposition(gauss); }) == Errc::unsupported_kind);
}

TEST_CASE("moments of named measures") {
  CHECK(moment(SpectralMeasure::dirac(0.0), 0) == 1.0);
  CHECK(moment(SpectralMeasure::dirac(0.0), 2) == 0.0);
  CHECK(moment(two_point(), 2) == 1.0);
  CHECK(moment(two_point(), 3) == 0.0);
  CHECK(moment(three_point(), 4) == 0.5);

  // Exact rational sums over the five atoms.
  const double expected[] = {1.0, 0.3, 1.075, 1.2375, 2.85625, 4.846875,
                             10.0515625};
  for (std::size_t k = 0; k < 7; ++k) {
    CHECK(close(moment(five_point(), k), expected[k], 1e-14));
  }
  CHECK(close(absolute_moment(five_point(), 1), 0.2 + 0.25 + 0.3 + 0.05, 1e-14));
}

TEST_CASE("moment bound") {
  CHECK(fit_moment_bound(SpectralMeasure::dirac(0.0), 6) == 0.0);
  CHECK(fit_moment_bound(two_point(), 8) == doctest::Approx(1.0).epsilon(1e-14));
  const auto wide = SpectralMeasure::discrete(0.0, {{-2.0, 0.5}, {2.0, 0.5}});
  CHECK(fit_moment_bound(wide, 8) == doctest::Approx(2.0).epsilon(1e-14));

  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_discrete(rng, uniform_int(rng, 1, 6));
    double previous = 0.0;
    for (std::size_t n = 1; n <= 10; ++n) {
      const double c = fit_moment_bound(m, n);
      CHECK(c >= previous);
      previous = c;
    }
  }
}

TEST_CASE("levy decomposition") {
  const auto g = levy_decomposition(SpectralMeasure::dirac(0.0));
  CHECK(g.gaussian_variance_density == 1.0);
  CHECK(g.jumps.empty());

  const auto p = levy_decomposition(SpectralMeasure::dirac(1.0));
  CHECK(p.gaussian_variance_density == 0.0);
  REQUIRE(p.jumps.size() == 1);
  CHECK(p.jumps[0].size == 1.0);
  CHECK(p.jumps[0].intensity == 1.0);

  const auto h = levy_decomposition(SpectralMeasure::discrete(0.5, {{2.0, 0.5}}));
  CHECK(h.gaussian_variance_density == 0.5);
  CHECK(h.jumps[0].intensity == 0.125);

  Rng rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto m = random_discrete(rng, uniform_int(rng, 1, 6));
    const auto d = levy_decomposition(m);
    double total = d.gaussian_variance_density;
    for (const auto& j : d.jumps) total += j.intensity * j.size * j.size;
    CHECK(std::abs(total - 1.0) <= 1e-12);
  }
}

TEST_CASE("property: parity and Hankel positivity of random measures") {
  Rng rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto sym = random_symmetric(rng, uniform_int(rng, 1, 3));
    for (std::size_t k = 1; k < 12; k += 2) {
      CHECK(std::abs(moment(sym, k)) <= 1e-15);
    }
    CHECK(moment(sym, 0) == doctest::Approx(1.0).epsilon(1e-14));

    const auto m = random_discrete(rng, uniform_int(rng, 1, 6));
    std::vector<double> seq;
    for (std::size_t k = 0; k <= 8; ++k) seq.push_back(moment(m, k));
    CHECK_NOTHROW(SpectralMeasure::from_moments(seq));
  }
}

TEST_CASE("measure field") {
  const Lattice l = Lattice::uniform_1d(3, 0.5);
  CHECK(code_of([&] { MeasureField(l, {two_point()}); }) ==
        Errc::invalid_argument);
  const auto f = MeasureField::uniform(l, three_point());
  CHECK(f.cell_count() == 3);
  CHECK(f.all_discrete());
  const MeasureField mixed(
      l, {two_point(), SpectralMeasure::from_moments({1.0, 0.0, 1.0}),
          three_point()});
  CHECK_FALSE(mixed.all_discrete());
}
