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
#include <span>
#include <vector>

namespace levychaos {

/// Axis-aligned box [lo, hi) in R^d.
struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  double volume() const;
};

/// Finite collection of disjoint bounded cells in R^d.
class Lattice {
 public:
  Lattice(std::size_t dimension, std::vector<Box> cells);

  /// Contiguous 1-d cells [x_j, x_j + v_j) starting at 0.
  static Lattice from_volumes(std::span<const double> volumes);
  static Lattice uniform_1d(std::size_t cells, double width);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t cell_count() const noexcept { return cells_.size(); }
  const Box& cell(std::size_t j) const { return cells_.at(j); }
  double volume(std::size_t j) const { return volumes_.at(j); }
  std::span<const double> volumes() const noexcept { return volumes_; }

 private:
  std::size_t dimension_;
  std::vector<Box> cells_;
  std::vector<double> volumes_;
};

}  // namespace levychaos
