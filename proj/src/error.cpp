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

#include "levychaos/error.hpp"

namespace levychaos {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::invalid_argument: return "invalid-argument";
    case Errc::invalid_measure: return "invalid-measure";
    case Errc::order_exceeded: return "order-exceeded";
    case Errc::unsupported_kind: return "unsupported-kind";
    case Errc::numerical_breakdown: return "numerical-breakdown";
    case Errc::degenerate_degree: return "degenerate-degree";
    case Errc::truncation_overflow: return "truncation-overflow";
    case Errc::size_exceeded: return "size-exceeded";
    case Errc::repeated_cell: return "repeated-cell";
    case Errc::config: return "config";
    case Errc::io: return "io";
  }
  return "unknown";
}

}  // namespace levychaos
