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

#include "levychaos/experiment.hpp"

#include <algorithm>
#include <array>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "levychaos/error.hpp"
#include "levychaos/fock.hpp"
#include "levychaos/orthopoly.hpp"
#include "levychaos/sampler.hpp"

namespace levychaos {

namespace {

constexpr std::array<std::string_view, 7> kChecks = {
    "recurrence", "simulate", "isometry", "orthogonality",
    "moments",    "cf",       "report"};

constexpr double kSigmas = 3.0;
constexpr double kFockRelTol = 1e-11;

// --- config parsing ----------------------------------------------------------

[[noreturn]] void fail(const toml::node* node, std::string_view field,
                       const std::string& what) {
  std::string where;
  if (node != nullptr) {
    const auto& src = node->source();
    where = "line " + std::to_string(src.begin.line) + ", column " +
            std::to_string(src.begin.column) + ": ";
  }
  throw Error(Errc::config,
              where + "field '" + std::string(field) + "': " + what);
}

void reject_unknown(const toml::table& table, std::string_view context,
                    std::initializer_list<std::string_view> allowed) {
  for (auto&& [key, node] : table) {
    if (std::find(allowed.begin(), allowed.end(), key.str()) == allowed.end()) {
      const std::string name = context.empty()
                                   ? std::string(key.str())
                                   : std::string(context) + "." +
                                         std::string(key.str());
      fail(&node, name, "unknown key");
    }
  }
}

double as_real(const toml::node& node, std::string_view field) {
  if (auto v = node.value<double>(); v && (node.is_number())) {
    if (!std::isfinite(*v)) fail(&node, field, "must be finite");
    return *v;
  }
  fail(&node, field, "expected a number");
}

std::size_t as_count(const toml::node& node, std::string_view field,
                     std::int64_t minimum) {
  const auto* i = node.as_integer();
  if (i == nullptr) fail(&node, field, "expected an integer");
  if (i->get() < minimum) {
    fail(&node, field, "must be >= " + std::to_string(minimum));
  }
  return static_cast<std::size_t>(i->get());
}

const toml::array& as_array(const toml::node& node, std::string_view field) {
  const auto* a = node.as_array();
  if (a == nullptr) fail(&node, field, "expected an array");
  return *a;
}

std::vector<double> real_list(const toml::node& node, std::string_view field) {
  std::vector<double> out;
  for (const auto& item : as_array(node, field)) out.push_back(as_real(item, field));
  return out;
}

SpectralMeasure parse_measure(const toml::table& t, std::string_view field,
                              bool allow_cell_keys) {
  if (allow_cell_keys) {
    reject_unknown(t, field, {"cell", "cells", "zero_weight", "atoms", "moments"});
  } else {
    reject_unknown(t, field, {"zero_weight", "atoms", "moments"});
  }
  const toml::node* moments = t.get("moments");
  const toml::node* atoms = t.get("atoms");
  const toml::node* zero = t.get("zero_weight");
  try {
    if (moments != nullptr) {
      if (atoms != nullptr || zero != nullptr) {
        fail(moments, field, "give either moments or zero_weight/atoms");
      }
      return SpectralMeasure::from_moments(real_list(*moments, "moments"));
    }
    const double zw = zero != nullptr ? as_real(*zero, "zero_weight") : 0.0;
    std::vector<Atom> list;
    if (atoms != nullptr) {
      for (const auto& item : as_array(*atoms, "atoms")) {
        const auto* pair = item.as_array();
        if (pair == nullptr || pair->size() != 2) {
          fail(&item, "atoms", "each atom is [location, weight]");
        }
        list.push_back({as_real(*pair->get(0), "atoms"),
                        as_real(*pair->get(1), "atoms")});
      }
    }
    return SpectralMeasure::discrete(zw, std::move(list));
  } catch (const Error& e) {
    if (e.code() == Errc::config) throw;
    fail(&t, field, e.what());
  }
}

ChaosIndex parse_index(const toml::node& node) {
  std::vector<std::size_t> counts;
  for (const auto& c : as_array(node, "chaos_indices")) {
    counts.push_back(as_count(c, "chaos_indices", 0));
  }
  ChaosIndex alpha(std::move(counts));
  if (alpha.order() == 0) fail(&node, "chaos_indices", "index of order 0");
  return alpha;
}

void parse_lattice(const toml::table& t, ExperimentConfig& c) {
  reject_unknown(t, "lattice", {"dimension", "volumes", "cells", "count", "width"});
  if (const auto* d = t.get("dimension")) c.dimension = as_count(*d, "lattice.dimension", 1);
  const toml::node* volumes = t.get("volumes");
  const toml::node* cells = t.get("cells");
  const toml::node* count = t.get("count");
  const int given = (volumes != nullptr) + (cells != nullptr) + (count != nullptr);
  if (given != 1) {
    fail(&t, "lattice", "give exactly one of volumes, cells or count");
  }
  try {
    if (volumes != nullptr) {
      if (c.dimension != 1) fail(volumes, "lattice.volumes", "needs dimension = 1");
      const auto v = real_list(*volumes, "lattice.volumes");
      const Lattice l = Lattice::from_volumes(v);
      for (std::size_t j = 0; j < l.cell_count(); ++j) c.cells.push_back(l.cell(j));
    } else if (count != nullptr) {
      if (c.dimension != 1) fail(count, "lattice.count", "needs dimension = 1");
      const std::size_t m = as_count(*count, "lattice.count", 1);
      double width = 1.0 / static_cast<double>(m);
      if (const auto* w = t.get("width")) width = as_real(*w, "lattice.width");
      const Lattice l = Lattice::uniform_1d(m, width);
      for (std::size_t j = 0; j < l.cell_count(); ++j) c.cells.push_back(l.cell(j));
    } else {
      for (const auto& item : as_array(*cells, "lattice.cells")) {
        const auto* box = item.as_table();
        if (box == nullptr) fail(&item, "lattice.cells", "expected {lo, hi}");
        reject_unknown(*box, "lattice.cells", {"lo", "hi"});
        const auto* lo = box->get("lo");
        const auto* hi = box->get("hi");
        if (lo == nullptr || hi == nullptr) {
          fail(&item, "lattice.cells", "each cell needs lo and hi");
        }
        c.cells.push_back({real_list(*lo, "lattice.cells.lo"),
                           real_list(*hi, "lattice.cells.hi")});
      }
    }
    if (c.cells.empty()) fail(&t, "lattice", "no cells");
    Lattice(c.dimension, c.cells);
  } catch (const Error& e) {
    if (e.code() == Errc::config) throw;
    fail(&t, "lattice", e.what());
  }
}

ExperimentConfig parse_table(const toml::table& root) {
  reject_unknown(root, "",
                 {"seed", "samples", "threads", "K", "N", "checks", "out_dir",
                  "lattice", "measure", "moments", "cell_measure", "phi",
                  "thetas", "max_power", "chaos_indices", "covariance_cell",
                  "covariance_max_degree", "recurrence_cell",
                  "simulate_samples"});
  ExperimentConfig c;

  const auto* lattice = root.get("lattice");
  if (lattice == nullptr || !lattice->is_table()) {
    fail(lattice, "lattice", "a [lattice] table is required");
  }
  parse_lattice(*lattice->as_table(), c);
  const std::size_t M = c.cells.size();

  const toml::node* measure = root.get("measure");
  const toml::node* moments = root.get("moments");
  if ((measure != nullptr) == (moments != nullptr)) {
    fail(measure != nullptr ? measure : moments, "measure",
         "give exactly one of measure or moments");
  }
  std::optional<SpectralMeasure> base;
  if (measure != nullptr) {
    if (!measure->is_table()) fail(measure, "measure", "expected a table");
    base = parse_measure(*measure->as_table(), "measure", false);
  } else {
    try {
      base = SpectralMeasure::from_moments(real_list(*moments, "moments"));
    } catch (const Error& e) {
      if (e.code() == Errc::config) throw;
      fail(moments, "moments", e.what());
    }
  }
  c.measures.assign(M, *base);
  if (const auto* overrides = root.get("cell_measure")) {
    for (const auto& item : as_array(*overrides, "cell_measure")) {
      const auto* t = item.as_table();
      if (t == nullptr) fail(&item, "cell_measure", "expected a table");
      const SpectralMeasure m = parse_measure(*t, "cell_measure", true);
      std::vector<std::size_t> targets;
      if (const auto* one = t->get("cell")) targets.push_back(as_count(*one, "cell_measure.cell", 0));
      if (const auto* many = t->get("cells")) {
        for (const auto& j : as_array(*many, "cell_measure.cells")) {
          targets.push_back(as_count(j, "cell_measure.cells", 0));
        }
      }
      if (targets.empty()) fail(&item, "cell_measure", "needs cell or cells");
      for (std::size_t j : targets) {
        if (j >= M) fail(&item, "cell_measure", "cell " + std::to_string(j) + " outside the lattice");
        c.measures[j] = m;
      }
    }
  }

  if (const auto* n = root.get("K")) c.degree_cut = as_count(*n, "K", 1);
  if (const auto* n = root.get("N")) c.particle_cut = as_count(*n, "N", 1);
  if (const auto* n = root.get("samples")) c.samples = as_count(*n, "samples", 2);
  if (const auto* n = root.get("seed")) {
    const auto* i = n->as_integer();
    if (i == nullptr) fail(n, "seed", "expected an integer");
    c.seed = static_cast<std::uint64_t>(i->get());
  }
  if (const auto* n = root.get("threads")) c.threads = as_count(*n, "threads", 0);
  if (const auto* n = root.get("out_dir")) {
    const auto s = n->value<std::string>();
    if (!s) fail(n, "out_dir", "expected a string");
    c.out_dir = *s;
  }
  if (const auto* n = root.get("checks")) {
    for (const auto& item : as_array(*n, "checks")) {
      const auto s = item.value<std::string>();
      if (!s) fail(&item, "checks", "expected a string");
      if (std::find(kChecks.begin(), kChecks.end(), *s) == kChecks.end()) {
        fail(&item, "checks", "unknown check '" + *s + "'");
      }
      c.checks.push_back(*s);
    }
  }
  if (const auto* n = root.get("phi")) {
    for (const auto& item : as_array(*n, "phi")) {
      auto f = real_list(item, "phi");
      if (f.size() != M) {
        fail(&item, "phi", "needs one value per cell (" + std::to_string(M) + ")");
      }
      c.test_functions.push_back(std::move(f));
    }
  } else {
    std::vector<double> ones(M, 1.0), alternating(M);
    for (std::size_t j = 0; j < M; ++j) alternating[j] = j % 2 == 0 ? 1.0 : -0.5;
    c.test_functions = {ones, alternating};
  }
  if (const auto* n = root.get("thetas")) {
    c.thetas = real_list(*n, "thetas");
  } else {
    for (int i = 0; i <= 12; ++i) c.thetas.push_back(-3.0 + 0.5 * i);
  }
  if (const auto* n = root.get("max_power")) c.max_power = as_count(*n, "max_power", 1);
  if (const auto* n = root.get("chaos_indices")) {
    for (const auto& item : as_array(*n, "chaos_indices")) {
      c.chaos_indices.push_back(parse_index(item));
    }
  } else {
    c.chaos_indices = {ChaosIndex({1}), ChaosIndex({2}), ChaosIndex({0, 1}),
                       ChaosIndex({1, 1}), ChaosIndex({2, 1})};
  }
  if (const auto* n = root.get("covariance_cell")) {
    c.covariance_cell = as_count(*n, "covariance_cell", 0);
    if (c.covariance_cell >= M) fail(n, "covariance_cell", "outside the lattice");
  }
  if (const auto* n = root.get("covariance_max_degree")) {
    c.covariance_max_degree = as_count(*n, "covariance_max_degree", 0);
  }
  if (const auto* n = root.get("recurrence_cell")) {
    c.recurrence_cell = as_count(*n, "recurrence_cell", 0);
    if (c.recurrence_cell >= M) fail(n, "recurrence_cell", "outside the lattice");
  }
  if (const auto* n = root.get("simulate_samples")) {
    c.simulate_samples = as_count(*n, "simulate_samples", 1);
  }
  return c;
}

// --- output ------------------------------------------------------------------

std::string fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string short_fmt(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", x);
  return buf;
}

std::string index_name(const ChaosIndex& alpha) {
  if (alpha.order() == 0) return "()";
  std::string s = "(";
  for (std::size_t n = 0; n < alpha.counts().size(); ++n) {
    if (n > 0) s += ' ';
    s += std::to_string(alpha.counts()[n]);
  }
  return s + ")";
}

CheckRow statistical(std::string quantity, double target, const Estimate& e) {
  const bool pass = std::isfinite(e.mean) &&
                    std::abs(e.mean - target) <= kSigmas * e.std_error;
  return {std::move(quantity), target, e.mean, e.std_error, pass};
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) {
      throw Error(Errc::io, "cannot create " + path.parent_path().string() +
                                ": " + ec.message());
    }
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::io, "cannot open " + path.string());
  out << text;
  if (!out) throw Error(Errc::io, "write failed: " + path.string());
}

std::uint64_t coefficient_seed(std::uint64_t seed, std::size_t ordinal) {
  return seed ^ (0x9E3779B97F4A7C15ULL * (ordinal + 1));
}

}  // namespace

// --- config ------------------------------------------------------------------

MeasureField ExperimentConfig::field() const {
  return MeasureField(Lattice(dimension, cells), measures);
}

std::span<const std::string_view> known_checks() noexcept { return kChecks; }

bool is_verify_check(std::string_view name) noexcept {
  return name == "isometry" || name == "orthogonality" || name == "moments" ||
         name == "cf";
}

ExperimentConfig parse_config(std::string_view text,
                              std::string_view source_name) {
  toml::table root;
  try {
    root = toml::parse(text, source_name);
  } catch (const toml::parse_error& e) {
    const auto& src = e.source();
    throw Error(Errc::config, "line " + std::to_string(src.begin.line) +
                                  ", column " +
                                  std::to_string(src.begin.column) + ": " +
                                  std::string(e.description()));
  }
  return parse_table(root);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::io, "cannot read config " + path.string());
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str(), path.string());
}

bool CheckResult::passed() const noexcept {
  return std::all_of(rows.begin(), rows.end(),
                     [](const CheckRow& r) { return r.pass; });
}

std::string to_csv(const CheckResult& result) {
  std::string out = "quantity,target,estimate,stderr,pass\n";
  for (const auto& r : result.rows) {
    out += r.quantity + ',' + fmt(r.target) + ',' + fmt(r.estimate) + ',' +
           fmt(r.std_error) + ',' + (r.pass ? "pass" : "fail") + '\n';
  }
  return out;
}

// --- experiment ----------------------------------------------------------------

Experiment::Experiment(ExperimentConfig config)
    : config_(std::move(config)), field_(config_.field()) {}

std::vector<ChaosIndex> Experiment::usable_indices() const {
  const std::size_t M = field_.cell_count();
  std::size_t max_support = 0;
  for (const auto& m : field_.measures()) {
    max_support = std::max(max_support, m.support_size());
  }
  std::vector<ChaosIndex> out;
  for (const auto& alpha : config_.chaos_indices) {
    if (alpha.order() > std::min(M, config_.particle_cut)) continue;
    if (alpha.max_degree() > config_.degree_cut) continue;
    if (alpha.max_degree() >= max_support) continue;
    out.push_back(alpha);
  }
  return out;
}

CheckResult Experiment::run_check(std::string_view name) const {
  const auto& c = config_;
  CheckResult result{std::string(name), {}};
  if (!is_verify_check(name)) {
    throw Error(Errc::invalid_argument,
                "not a verify check: " + std::string(name));
  }

  if (name == "cf") {
    const NoiseModel model(field_);
    for (std::size_t p = 0; p < c.test_functions.size(); ++p) {
      const auto& phi = c.test_functions[p];
      const auto est =
          empirical_cf(model, phi, c.thetas, c.samples, c.seed, c.threads);
      for (std::size_t t = 0; t < c.thetas.size(); ++t) {
        const auto target = model.char_functional(phi, c.thetas[t]);
        // The real and imaginary rows share one verdict: the modulus of the
        // complex error against 3 combined standard errors.
        const double err = std::abs(est[t].value - target);
        const bool pass =
            std::isfinite(err) && err <= kSigmas * est[t].std_error();
        const std::string tag = "[phi=" + std::to_string(p) +
                                ";theta=" + short_fmt(c.thetas[t]) + "]";
        result.rows.push_back({"cf_re" + tag, target.real(),
                               est[t].value.real(), est[t].stderr_re, pass});
        result.rows.push_back({"cf_im" + tag, target.imag(),
                               est[t].value.imag(), est[t].stderr_im, pass});
      }
    }
    return result;
  }

  if (name == "moments") {
    const NoiseModel model(field_);
    const ModeBasis basis(field_, c.degree_cut);
    const std::size_t powers =
        std::min({c.max_power, c.particle_cut, c.degree_cut + 1});
    const auto est = empirical_pairing_moments(model, c.test_functions, powers,
                                               c.samples, c.seed, c.threads);
    for (std::size_t p = 0; p < c.test_functions.size(); ++p) {
      for (std::size_t n = 1; n <= powers; ++n) {
        const std::vector<OperatorSpec> ops(
            n, OperatorSpec::A(c.test_functions[p]));
        const double target = vacuum_moment(basis, ops, c.particle_cut);
        result.rows.push_back(statistical(
            "pairing_moment[phi=" + std::to_string(p) +
                ";n=" + std::to_string(n) + "]",
            target, est[p * powers + (n - 1)]));
      }
    }
    const ChaosEvaluator eval(field_, c.degree_cut);
    const std::size_t D = c.covariance_max_degree;
    const std::size_t j = c.covariance_cell;
    const auto cov = estimate_teugels(eval, j, D, c.samples, c.seed, c.threads);
    const SpectralMeasure& sigma = field_.measure(j);
    for (std::size_t k = 0; k <= D; ++k) {
      for (std::size_t l = k; l <= D; ++l) {
        const double target = field_.lattice().volume(j) * moment(sigma, k + l);
        result.rows.push_back(statistical(
            "EYY[cell=" + std::to_string(j) + ";k=" + std::to_string(k) +
                ";l=" + std::to_string(l) + "]",
            target, cov.y[k * (D + 1) + l]));
      }
    }
    return result;
  }

  const ChaosEvaluator eval(field_, c.degree_cut);
  const auto indices = usable_indices();
  std::vector<ChaosCoefficient> coeffs;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    coeffs.push_back(random_coefficient(indices[i], field_.cell_count(),
                                        coefficient_seed(c.seed, i)));
  }
  const ModeBasis basis(field_, c.degree_cut);

  if (name == "isometry") {
    const auto gram = estimate_gram(eval, coeffs, c.samples, c.seed, c.threads);
    const std::size_t F = coeffs.size();
    std::size_t q = 0;
    for (std::size_t a = 0; a < F; ++a) {
      const double target = g_norm_sq(basis, coeffs[a]);
      const std::string tag = "[alpha=" + index_name(indices[a]) + "]";
      result.rows.push_back(statistical("variance" + tag, target, gram[q]));
      q += F - a;
      const double fock = norm_sq(kmap_fock(basis, coeffs[a], c.particle_cut));
      const bool pass = std::abs(fock - target) <=
                        kFockRelTol * std::max(1.0, std::abs(target));
      result.rows.push_back({"fock_norm" + tag, target, fock, 0.0, pass});
    }
    return result;
  }

  // orthogonality
  std::vector<ChaosCoefficient> all;
  all.push_back(ChaosCoefficient::constant(1.0));
  all.insert(all.end(), coeffs.begin(), coeffs.end());
  std::vector<std::string> names{"1"};
  for (const auto& alpha : indices) names.push_back(index_name(alpha));
  const auto gram = estimate_gram(eval, all, c.samples, c.seed, c.threads);
  const std::size_t F = all.size();
  std::size_t q = 0;
  for (std::size_t a = 0; a < F; ++a) {
    ++q;  // diagonal entries belong to the isometry check
    for (std::size_t b = a + 1; b < F; ++b, ++q) {
      result.rows.push_back(statistical(
          "inner[" + names[a] + "," + names[b] + "]",
          g_inner(basis, all[a], all[b]), gram[q]));
    }
  }
  const std::size_t j = c.covariance_cell;
  const RecurrenceTable& t = eval.table(j);
  const std::size_t D =
      std::min({c.covariance_max_degree, c.degree_cut, t.support_size - 1});
  const auto cov = estimate_teugels(eval, j, D, c.samples, c.seed, c.threads);
  const double volume = field_.lattice().volume(j);
  for (std::size_t k = 0; k <= D; ++k) {
    for (std::size_t l = k; l <= D; ++l) {
      const double target = k == l ? volume * t.gamma_at(k) : 0.0;
      result.rows.push_back(statistical(
          "EZZ[cell=" + std::to_string(j) + ";k=" + std::to_string(k) +
              ";l=" + std::to_string(l) + "]",
          target, cov.z[k * (D + 1) + l]));
    }
  }
  return result;
}

std::string Experiment::recurrence_csv(std::size_t cell) const {
  if (cell >= field_.cell_count()) {
    throw Error(Errc::invalid_argument,
                "cell " + std::to_string(cell) + " outside the lattice");
  }
  const std::size_t K = config_.degree_cut;
  const RecurrenceTable t =
      recurrence_coefficients(field_.measure(cell), K + 1);
  std::string out = "n,b_n,a_n,gamma_n\n";
  for (std::size_t n = 0; n <= K; ++n) {
    out += std::to_string(n) + ',' + fmt(t.b_at(n)) + ',' + fmt(t.a_at(n)) +
           ',' + fmt(t.gamma_at(n)) + '\n';
  }
  return out;
}

void Experiment::write_simulation(const std::filesystem::path& path,
                                  std::size_t samples) const {
  const NoiseModel model(field_);
  const std::size_t M = field_.cell_count();
  std::size_t R = 0;
  for (std::size_t j = 0; j < M; ++j) R = std::max(R, model.jump_sizes(j).size());
  std::string out = "sample_index,cell,gaussian";
  for (std::size_t r = 0; r < R; ++r) out += ",jump_" + std::to_string(r);
  out += '\n';
  PathSample path_sample;
  for (std::size_t s = 0; s < samples; ++s) {
    model.sample(config_.seed, s, path_sample);
    for (std::size_t j = 0; j < M; ++j) {
      out += std::to_string(s) + ',' + std::to_string(j) + ',' +
             fmt(path_sample.gaussian[j]);
      const auto& counts = path_sample.jump_counts[j];
      for (std::size_t r = 0; r < R; ++r) {
        out += ',';
        if (r < counts.size()) out += std::to_string(counts[r]);
      }
      out += '\n';
    }
  }
  write_file(path, out);
}

bool Experiment::run(std::vector<CheckResult>* results) const {
  const auto& c = config_;
  bool all_pass = true;
  std::vector<CheckResult> done;
  for (const auto& name : c.checks) {
    if (name == "recurrence") {
      write_file(c.out_dir / "recurrence.csv", recurrence_csv(c.recurrence_cell));
    } else if (name == "simulate") {
      write_simulation(c.out_dir / "simulate.csv", c.simulate_samples);
    } else if (name == "report") {
      std::string out = "check,rows,failed,status\n";
      for (const auto& r : done) {
        const auto failed = std::count_if(r.rows.begin(), r.rows.end(),
                                          [](const CheckRow& x) { return !x.pass; });
        out += r.name + ',' + std::to_string(r.rows.size()) + ',' +
               std::to_string(failed) + ',' + (r.passed() ? "pass" : "fail") +
               '\n';
      }
      write_file(c.out_dir / "summary.csv", out);
    } else {
      CheckResult r = run_check(name);
      write_file(c.out_dir / (name + ".csv"), to_csv(r));
      all_pass = all_pass && r.passed();
      done.push_back(std::move(r));
    }
  }
  if (results != nullptr) *results = std::move(done);
  return all_pass;
}

}  // namespace levychaos
