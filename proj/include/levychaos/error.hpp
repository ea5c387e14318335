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

#include <stdexcept>
#include <string>

namespace levychaos {

// Values mirror lc_status in levychaos.h; keep the two in sync.
enum class Errc : int {
  invalid_argument = 1,
  invalid_measure = 2,
  order_exceeded = 3,
  unsupported_kind = 4,
  numerical_breakdown = 5,
  degenerate_degree = 6,
  truncation_overflow = 7,
  size_exceeded = 8,
  repeated_cell = 9,
  config = 10,
  io = 11,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace levychaos
