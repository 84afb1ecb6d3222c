// Copyright 2026 The qbn Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QBN_SRC_ENUMERATE_HPP
#define QBN_SRC_ENUMERATE_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "qbn/error.hpp"
#include "qbn/network.hpp"

namespace qbn::detail {

inline std::uint64_t product_of_cardinalities(const Network& net,
                                              std::span<const VarId> vars) {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (auto v : vars) {
    const auto c = static_cast<std::uint64_t>(net.cardinality(v));
    if (count > kMax / c) return kMax;
    count *= c;
  }
  return count;
}

inline void check_cap(std::uint64_t count, std::uint64_t cap) {
  if (count > cap) {
    throw InferenceError("enumeration needs " + std::to_string(count) +
                         " configurations, above the cap of " +
                         std::to_string(cap));
  }
}

/// Visits every assignment of `free_vars` (canonical order, last fastest),
/// with the other entries of `states` held fixed. fn receives the full
/// state vector and the digits of the free variables.
template <typename Fn>
void for_each_completion(const Network& net, std::span<const VarId> free_vars,
                         std::vector<StateIndex>& states, Fn&& fn) {
  std::vector<StateIndex> digits(free_vars.size(), 0);
  for (auto v : free_vars) states[v.index] = 0;
  while (true) {
    fn(std::span<const StateIndex>(states), std::span<const StateIndex>(digits));
    std::size_t i = free_vars.size();
    bool done = true;
    while (i > 0) {
      --i;
      const auto v = free_vars[i];
      if (++digits[i] < net.cardinality(v)) {
        states[v.index] = digits[i];
        done = false;
        break;
      }
      digits[i] = 0;
      states[v.index] = 0;
    }
    if (done) return;
  }
}

inline double joint_unchecked(const Network& net,
                              std::span<const StateIndex> states) {
  double p = 1.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    p *= net.cpt(VarId{i}).probability_in(states);
  }
  return p;
}

}  // namespace qbn::detail

#endif  // QBN_SRC_ENUMERATE_HPP
