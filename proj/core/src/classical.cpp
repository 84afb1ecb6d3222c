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

#include "qbn/classical.hpp"

#include "enumerate.hpp"
#include "qbn/error.hpp"
#include "qbn/quantum.hpp"

namespace qbn {

void check_query(const Network& net, VarId query, const Evidence& evidence) {
  if (query.index >= net.size()) {
    throw InferenceError("query variable id out of range");
  }
  for (const auto& [v, s] : evidence) {
    if (v.index >= net.size()) {
      throw InferenceError("evidence variable id out of range");
    }
    if (s >= net.cardinality(v)) {
      throw InferenceError("evidence state out of range for '" +
                           net.variable(v).name + "'");
    }
  }
  if (evidence.contains(query)) {
    throw InferenceError("query variable '" + net.variable(query).name +
                         "' is also observed");
  }
}

double joint_probability(const Network& net, const Assignment& a) {
  // configuration_index() validates totality and ranges.
  (void)configuration_index(net, a);
  return detail::joint_unchecked(net, a.states());
}

std::vector<JointEntry> joint_table(const Network& net, std::uint64_t cap) {
  detail::check_cap(net.configuration_count(), cap);
  std::vector<VarId> all;
  for (std::size_t i = 0; i < net.size(); ++i) all.push_back(VarId{i});
  std::vector<JointEntry> table;
  table.reserve(net.configuration_count());
  std::vector<StateIndex> states(net.size(), 0);
  detail::for_each_completion(
      net, all, states, [&](std::span<const StateIndex> s, auto) {
        table.push_back({Assignment({s.begin(), s.end()}),
                         detail::joint_unchecked(net, s)});
      });
  return table;
}

Distribution infer_classical(const Network& net, VarId query,
                             const Evidence& evidence, std::uint64_t cap) {
  check_query(net, query, evidence);
  const auto unobserved = unobserved_variables(net, query, evidence);
  const auto per_state = detail::product_of_cardinalities(net, unobserved);
  const auto card = net.cardinality(query);
  detail::check_cap(per_state > cap / card ? cap + 1 : per_state * card, cap);

  std::vector<StateIndex> states(net.size(), 0);
  for (const auto& [v, s] : evidence) states[v.index] = s;

  Distribution d{query, std::vector<double>(card, 0.0)};
  double total = 0.0;
  for (StateIndex x = 0; x < card; ++x) {
    states[query.index] = x;
    double mass = 0.0;
    detail::for_each_completion(net, unobserved, states,
                                [&](std::span<const StateIndex> s, auto) {
                                  mass += detail::joint_unchecked(net, s);
                                });
    d.probabilities[x] = mass;
    total += mass;
  }
  if (!(total > 0.0)) {
    throw ZeroMassError("evidence has probability zero; Pr(" +
                        net.variable(query).name + " | evidence) is undefined");
  }
  const double alpha = 1.0 / total;
  for (auto& p : d.probabilities) p *= alpha;
  return d;
}

}  // namespace qbn
