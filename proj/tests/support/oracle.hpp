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

#ifndef QBN_TESTS_ORACLE_HPP
#define QBN_TESTS_ORACLE_HPP

#include <optional>
#include <vector>

#include "qbn/network.hpp"

namespace qbn::testing {

/// Joint probability computed by gathering each node's parent states and
/// calling Cpt::probability(); shares no code with the library's
/// enumeration helpers.
double oracle_joint(const Network& net, const std::vector<StateIndex>& states);

/// All configurations via a local odometer, in canonical order.
std::vector<std::vector<StateIndex>> oracle_configurations(const Network& net);

/// Unnormalized Pr(query = x, evidence) for each x.
std::vector<double> oracle_masses(const Network& net, VarId query,
                                  const Evidence& evidence);

/// Pr(evidence).
double oracle_evidence_probability(const Network& net, const Evidence& evidence);

/// Pr(query | evidence) from the filtered joint; nullopt when Pr(evidence) = 0.
std::optional<std::vector<double>> oracle_conditional(const Network& net,
                                                      VarId query,
                                                      const Evidence& evidence);

}  // namespace qbn::testing

#endif  // QBN_TESTS_ORACLE_HPP
