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

#include "oracle.hpp"

namespace qbn::testing {

double oracle_joint(const Network& net, const std::vector<StateIndex>& states) {
  double p = 1.0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto& cpt = net.cpt(VarId{i});
    std::vector<StateIndex> parent_states;
    for (auto parent : cpt.parents()) parent_states.push_back(states[parent.index]);
    p *= cpt.probability(parent_states, states[i]);
  }
  return p;
}

std::vector<std::vector<StateIndex>> oracle_configurations(const Network& net) {
  std::vector<std::vector<StateIndex>> out;
  std::vector<StateIndex> states(net.size(), 0);
  while (true) {
    out.push_back(states);
    std::size_t i = net.size();
    for (; i > 0; --i) {
      auto& s = states[i - 1];
      if (++s < net.cardinality(VarId{i - 1})) break;
      s = 0;
    }
    if (i == 0) return out;
  }
}

namespace {

bool consistent(const std::vector<StateIndex>& states, const Evidence& evidence) {
  for (const auto& [v, s] : evidence) {
    if (states[v.index] != s) return false;
  }
  return true;
}

}  // namespace

std::vector<double> oracle_masses(const Network& net, VarId query,
                                  const Evidence& evidence) {
  std::vector<double> masses(net.cardinality(query), 0.0);
  for (const auto& states : oracle_configurations(net)) {
    if (consistent(states, evidence)) masses[states[query.index]] += oracle_joint(net, states);
  }
  return masses;
}

double oracle_evidence_probability(const Network& net, const Evidence& evidence) {
  double total = 0.0;
  for (const auto& states : oracle_configurations(net)) {
    if (consistent(states, evidence)) total += oracle_joint(net, states);
  }
  return total;
}

std::optional<std::vector<double>> oracle_conditional(const Network& net,
                                                      VarId query,
                                                      const Evidence& evidence) {
  auto masses = oracle_masses(net, query, evidence);
  double total = 0.0;
  for (double m : masses) total += m;
  if (!(total > 0.0)) return std::nullopt;
  for (auto& m : masses) m /= total;
  return masses;
}

}  // namespace qbn::testing
