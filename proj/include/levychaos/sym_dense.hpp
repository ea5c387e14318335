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

// Dense n-fold tensors over a small one-particle space. Used as an explicit
// oracle for the symmetrization projection; the production Fock code never
// materializes these.

#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "levychaos/fock.hpp"

namespace levychaos {

inline constexpr std::size_t kMaxDenseOrder = 4;
inline constexpr std::size_t kMaxDenseEntries = std::size_t{1} << 22;

class DenseTensor {
 public:
  DenseTensor(std::size_t dim, std::size_t order);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t order() const noexcept { return order_; }
  std::span<double> data() noexcept { return data_; }
  std::span<const double> data() const noexcept { return data_; }

  double& at(std::span<const std::size_t> index);
  double at(std::span<const std::size_t> index) const;

  DenseTensor& operator+=(const DenseTensor& other);
  DenseTensor& operator*=(double factor);

 private:
  std::size_t offset(std::span<const std::size_t> index) const;

  std::size_t dim_;
  std::size_t order_;
  std::vector<double> data_;
};

double inner(const DenseTensor& u, const DenseTensor& v);

/// f_1 (x) f_2 (x) ... (x) f_n.
DenseTensor tensor_product(std::span<const OneParticleVector> factors);

/// Sym_n T = (1/n!) sum over permutations of the tensor slots.
DenseTensor sym_project(const DenseTensor& tensor);

/// Sym_n of a sum of elementary tensors; every inner list holds n factors.
DenseTensor sym_project_dense(
    const std::vector<std::vector<OneParticleVector>>& factors);

/// Occupation-basis image of a symmetric dense tensor T in the weighted
/// space: amplitude of |nu> is n! T_nu / sqrt(nu!).
FockVector fock_from_symmetric(const DenseTensor& symmetric,
                               std::size_t truncation);

}  // namespace levychaos
