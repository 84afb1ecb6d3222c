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

#ifndef QBN_CLASSICAL_HPP
#define QBN_CLASSICAL_HPP

#include <cstdint>
#include <vector>

#include "qbn/network.hpp"

namespace qbn {

/// Upper bound on enumerated configurations for any single call.
inline constexpr std::uint64_t kDefaultConfigurationCap = std::uint64_t{1} << 20;

struct Distribution {
  VarId variable;
  std::vector<double> probabilities;
};

struct JointEntry {
  Assignment assignment;
  double probability;
};

/// Product of CPT entries; throws InferenceError unless `a` is total and in
/// range.
double joint_probability(const Network& net, const Assignment& a);

/// Full joint in canonical index order. Throws InferenceError above `cap`.
std::vector<JointEntry> joint_table(
    const Network& net, std::uint64_t cap = kDefaultConfigurationCap);

/// Exact Pr(query | evidence) by enumerating the unobserved variables.
/// Throws ZeroMassError when the evidence has probability zero.
Distribution infer_classical(const Network& net, VarId query,
                             const Evidence& evidence,
                             std::uint64_t cap = kDefaultConfigurationCap);

/// Throws InferenceError if `query` is observed, an evidence state is out of
/// range, or a variable id is unknown.
void check_query(const Network& net, VarId query, const Evidence& evidence);

}  // namespace qbn

#endif  // QBN_CLASSICAL_HPP
