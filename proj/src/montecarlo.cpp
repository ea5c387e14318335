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

#include "levychaos/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

namespace levychaos {

namespace {

constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

StreamRng::StreamRng(std::uint64_t seed, std::uint64_t sample,
                     std::uint64_t cell, std::uint64_t slot) noexcept {
  std::uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (sample + 0x632be59bd9b4e019ULL));
  h = mix64(h ^ (cell + 0x8cb92ba72f3d8dd7ULL));
  h = mix64(h ^ (slot + 0xd6e8feb86659fd93ULL));
  state_ = h;
}

StreamRng::result_type StreamRng::operator()() noexcept {
  state_ += kGolden;
  return mix64(state_);
}

void MomentSums::add(std::span<const double> values) {
  for (std::size_t q = 0; q < sum_.size(); ++q) {
    sum_[q] += values[q];
    sum_sq_[q] += values[q] * values[q];
  }
  ++count_;
}

void MomentSums::merge(const MomentSums& other) {
  for (std::size_t q = 0; q < sum_.size(); ++q) {
    sum_[q] += other.sum_[q];
    sum_sq_[q] += other.sum_sq_[q];
  }
  count_ += other.count_;
}

Estimate MomentSums::estimate(std::size_t q) const {
  Estimate e;
  if (count_ == 0) return e;
  const double n = static_cast<double>(count_);
  e.mean = sum_[q] / n;
  if (count_ > 1) {
    const double var =
        std::max(0.0, (sum_sq_[q] - n * e.mean * e.mean) / (n - 1.0));
    e.std_error = std::sqrt(var / n);
  }
  return e;
}

std::vector<Estimate> MomentSums::estimates() const {
  std::vector<Estimate> out;
  out.reserve(sum_.size());
  for (std::size_t q = 0; q < sum_.size(); ++q) out.push_back(estimate(q));
  return out;
}

std::size_t default_threads() noexcept {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

MomentSums accumulate_blocks(std::size_t samples, std::size_t threads,
                             std::size_t quantities, const BlockFn& block) {
  const std::size_t blocks = (samples + kBlockSize - 1) / kBlockSize;
  std::vector<MomentSums> partial(blocks, MomentSums(quantities));
  auto run = [&](std::size_t b) {
    const std::size_t begin = b * kBlockSize;
    const std::size_t end = std::min(samples, begin + kBlockSize);
    block(begin, end, partial[b]);
  };

  if (threads == 0) threads = default_threads();
  threads = std::min(threads, std::max<std::size_t>(blocks, 1));
  if (threads <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run(b);
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (;;) {
          const std::size_t b = next.fetch_add(1);
          if (b >= blocks) return;
          try {
            run(b);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(blocks);
            return;
          }
        }
      });
    }
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
  }

  MomentSums total(quantities);
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace levychaos
