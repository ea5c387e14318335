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

#include "levychaos/sym_dense.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

namespace {

void check_size(std::size_t dim, std::size_t order) {
  if (order > kMaxDenseOrder) {
    throw Error(Errc::size_exceeded,
                "dense tensors are limited to order " +
                    std::to_string(kMaxDenseOrder));
  }
  std::size_t entries = 1;
  for (std::size_t p = 0; p < order; ++p) {
    if (dim != 0 && entries > kMaxDenseEntries / dim) {
      throw Error(Errc::size_exceeded, "dense tensor too large");
    }
    entries *= dim;
  }
}

// Advances a multi-index over [0, dim)^order; false after the last one.
bool next_index(std::vector<std::size_t>& index, std::size_t dim) {
  for (std::size_t p = index.size(); p-- > 0;) {
    if (++index[p] < dim) return true;
    index[p] = 0;
  }
  return false;
}

}  // namespace

DenseTensor::DenseTensor(std::size_t dim, std::size_t order)
    : dim_(dim), order_(order) {
  check_size(dim, order);
  std::size_t entries = 1;
  for (std::size_t p = 0; p < order; ++p) entries *= dim;
  data_.assign(entries, 0.0);
}

std::size_t DenseTensor::offset(std::span<const std::size_t> index) const {
  std::size_t off = 0;
  for (std::size_t p = 0; p < order_; ++p) off = off * dim_ + index[p];
  return off;
}

double& DenseTensor::at(std::span<const std::size_t> index) {
  return data_[offset(index)];
}

double DenseTensor::at(std::span<const std::size_t> index) const {
  return data_[offset(index)];
}

DenseTensor& DenseTensor::operator+=(const DenseTensor& other) {
  if (other.dim_ != dim_ || other.order_ != order_) {
    throw Error(Errc::invalid_argument, "dense tensor shape mismatch");
  }
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

DenseTensor& DenseTensor::operator*=(double factor) {
  for (double& x : data_) x *= factor;
  return *this;
}

double inner(const DenseTensor& u, const DenseTensor& v) {
  if (u.dim() != v.dim() || u.order() != v.order()) {
    throw Error(Errc::invalid_argument, "dense tensor shape mismatch");
  }
  return std::inner_product(u.data().begin(), u.data().end(), v.data().begin(),
                            0.0);
}

DenseTensor tensor_product(std::span<const OneParticleVector> factors) {
  if (factors.empty()) {
    throw Error(Errc::invalid_argument, "tensor product of no factors");
  }
  const std::size_t dim = factors.front().size();
  for (const auto& f : factors) {
    if (f.size() != dim) {
      throw Error(Errc::invalid_argument, "factor dimension mismatch");
    }
  }
  DenseTensor out(dim, factors.size());
  std::vector<std::size_t> index(factors.size(), 0);
  do {
    double v = 1.0;
    for (std::size_t p = 0; p < index.size(); ++p) v *= factors[p][index[p]];
    out.at(index) = v;
  } while (next_index(index, dim));
  return out;
}

DenseTensor sym_project(const DenseTensor& tensor) {
  const std::size_t n = tensor.order();
  DenseTensor out(tensor.dim(), n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double count = 0.0;
  std::vector<std::size_t> index(n, 0), permuted(n);
  do {
    count += 1.0;
    std::fill(index.begin(), index.end(), 0);
    do {
      for (std::size_t p = 0; p < n; ++p) permuted[p] = index[perm[p]];
      out.at(index) += tensor.at(permuted);
    } while (next_index(index, tensor.dim()));
  } while (std::next_permutation(perm.begin(), perm.end()));
  out *= 1.0 / count;
  return out;
}

DenseTensor sym_project_dense(
    const std::vector<std::vector<OneParticleVector>>& factors) {
  if (factors.empty()) {
    throw Error(Errc::invalid_argument, "no elementary tensors given");
  }
  DenseTensor sum = tensor_product(factors.front());
  for (std::size_t t = 1; t < factors.size(); ++t) {
    sum += tensor_product(factors[t]);
  }
  return sym_project(sum);
}

FockVector fock_from_symmetric(const DenseTensor& symmetric,
                               std::size_t truncation) {
  const std::size_t n = symmetric.order();
  double n_factorial = 1.0;
  for (std::size_t p = 2; p <= n; ++p) n_factorial *= static_cast<double>(p);

  FockVector out(truncation);
  std::vector<std::size_t> index(n, 0);
  do {
    // Visit each multiset once through its sorted representative.
    if (!std::is_sorted(index.begin(), index.end())) continue;
    const double value = symmetric.at(index);
    if (value == 0.0) continue;
    Occupation occ(std::vector<std::uint32_t>(index.begin(), index.end()));
    out.add(occ, n_factorial * value / symmetric_product_amplitude(occ));
  } while (next_index(index, symmetric.dim()));
  out.prune();
  return out;
}

}  // namespace levychaos
