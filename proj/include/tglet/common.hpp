// Copyright 2026 the tglet authors
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

#ifndef TGLET_COMMON_HPP
#define TGLET_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tglet {

using node_id = std::uint32_t;
using type_id = std::uint32_t;  // dense type ids start at 1; 0 is reserved
using edge_id = std::uint32_t;

/// Raised when an input file cannot be parsed or is structurally invalid.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an internal invariant fails (a bug, never an input problem).
class internal_consistency_error : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw internal_consistency_error("64-bit count overflow");
  return r;
}

// n*(n-1)/2; n comes from a degree so the product fits 64 bits.
inline constexpr std::uint64_t choose2(std::uint64_t n) {
  return n * (n - 1) / 2;
}

}  // namespace tglet

#endif  // TGLET_COMMON_HPP
