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

#include "levychaos/lattice.hpp"

#include <string>

#include "levychaos/error.hpp"

namespace levychaos {

double Box::volume() const {
  double v = 1.0;
  for (std::size_t i = 0; i < lo.size(); ++i) v *= hi[i] - lo[i];
  return v;
}

namespace {

bool interiors_overlap(const Box& a, const Box& b) {
  for (std::size_t i = 0; i < a.lo.size(); ++i) {
    if (a.hi[i] <= b.lo[i] || b.hi[i] <= a.lo[i]) return false;
  }
  return true;
}

}  // namespace

Lattice::Lattice(std::size_t dimension, std::vector<Box> cells)
    : dimension_(dimension), cells_(std::move(cells)) {
  if (dimension_ == 0) {
    throw Error(Errc::invalid_argument, "lattice dimension must be positive");
  }
  if (cells_.empty()) {
    throw Error(Errc::invalid_argument, "lattice needs at least one cell");
  }
  volumes_.reserve(cells_.size());
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    const Box& box = cells_[j];
    if (box.lo.size() != dimension_ || box.hi.size() != dimension_) {
      throw Error(Errc::invalid_argument,
                  "cell " + std::to_string(j) + " has wrong dimension");
    }
    const double v = box.volume();
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (!(box.hi[i] > box.lo[i])) {
        throw Error(Errc::invalid_argument,
                    "cell " + std::to_string(j) + " has non-positive extent");
      }
    }
    volumes_.push_back(v);
  }
  for (std::size_t j = 0; j < cells_.size(); ++j) {
    for (std::size_t k = j + 1; k < cells_.size(); ++k) {
      if (interiors_overlap(cells_[j], cells_[k])) {
        throw Error(Errc::invalid_argument,
                    "cells " + std::to_string(j) + " and " + std::to_string(k) +
                        " overlap");
      }
    }
  }
}

Lattice Lattice::from_volumes(std::span<const double> volumes) {
  std::vector<Box> cells;
  cells.reserve(volumes.size());
  double x = 0.0;
  for (double v : volumes) {
    if (!(v > 0.0)) {
      throw Error(Errc::invalid_argument, "cell volumes must be positive");
    }
    cells.push_back(Box{{x}, {x + v}});
    x += v;
  }
  Lattice lattice(1, std::move(cells));
  // Keep the requested volumes exactly rather than the rounded differences.
  lattice.volumes_.assign(volumes.begin(), volumes.end());
  return lattice;
}

Lattice Lattice::uniform_1d(std::size_t cells, double width) {
  std::vector<double> volumes(cells, width);
  return from_volumes(volumes);
}

}  // namespace levychaos
