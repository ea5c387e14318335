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
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace levychaos {

/// SplitMix64 stream whose starting state is derived from a key tuple, so
/// every (seed, sample, cell, slot) owns an independent reproducible stream
/// regardless of which thread draws it. Satisfies
/// UniformRandomBitGenerator.
class StreamRng {
 public:
  using result_type = std::uint64_t;

  StreamRng(std::uint64_t seed, std::uint64_t sample, std::uint64_t cell,
            std::uint64_t slot) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }
  result_type operator()() noexcept;

 private:
  std::uint64_t state_;
};

struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
};

/// Running sums of several per-sample quantities.
class MomentSums {
 public:
  explicit MomentSums(std::size_t quantities)
      : sum_(quantities, 0.0), sum_sq_(quantities, 0.0) {}

  void add(std::span<const double> values);
  void merge(const MomentSums& other);

  std::size_t count() const noexcept { return count_; }
  std::size_t quantities() const noexcept { return sum_.size(); }
  /// Sample mean and its standard error (unbiased variance / n).
  Estimate estimate(std::size_t q) const;
  std::vector<Estimate> estimates() const;

 private:
  std::size_t count_ = 0;
  std::vector<double> sum_;
  std::vector<double> sum_sq_;
};

/// Samples are split into fixed blocks independent of the thread count; each
/// block is accumulated serially and the block sums are merged in block
/// order. Results are therefore bit-identical for any `threads`.
inline constexpr std::size_t kBlockSize = 4096;

using BlockFn =
    std::function<void(std::size_t begin, std::size_t end, MomentSums& sums)>;

MomentSums accumulate_blocks(std::size_t samples, std::size_t threads,
                             std::size_t quantities, const BlockFn& block);

/// Threads to use when the caller passes 0.
std::size_t default_threads() noexcept;

}  // namespace levychaos
