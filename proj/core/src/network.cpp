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

#include "qbn/network.hpp"

#include <limits>
#include <set>

#include "qbn/error.hpp"
#include "qbn/validate.hpp"

namespace qbn {

namespace {

std::string join_violations(const std::vector<Violation>& violations) {
  std::string out = "invalid network";
  for (const auto& v : violations) {
    out += "\n  ";
    out += format(v);
  }
  return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(join_violations(violations)), violations_(std::move(violations)) {}

RangeError::RangeError(double target, double low, double high)
    : SearchError("target " + std::to_string(target) +
                  " is outside the attainable range [" + std::to_string(low) +
                  ", " + std::to_string(high) + "]"),
      low_(low),
      high_(high) {}

Cpt::Cpt(VarId owner, std::vector<VarId> parents,
         std::vector<std::size_t> parent_cardinalities,
         std::size_t cardinality, std::vector<double> table)
    : owner_(owner),
      parents_(std::move(parents)),
      parent_cardinalities_(std::move(parent_cardinalities)),
      cardinality_(cardinality),
      table_(std::move(table)) {
  if (parents_.size() != parent_cardinalities_.size() ||
      table_.size() != row_count() * cardinality_) {
    throw Error("Cpt: table shape does not match parent cardinalities");
  }
}

std::size_t Cpt::row_count() const noexcept {
  std::size_t rows = 1;
  for (auto c : parent_cardinalities_) rows *= c;
  return rows;
}

std::size_t Cpt::row_index(std::span<const StateIndex> parent_states) const {
  if (parent_states.size() != parents_.size()) {
    throw InferenceError("Cpt: expected " + std::to_string(parents_.size()) +
                         " parent states");
  }
  std::size_t index = 0;
  for (std::size_t i = 0; i < parents_.size(); ++i) {
    if (parent_states[i] >= parent_cardinalities_[i]) {
      throw InferenceError("Cpt: parent state out of range");
    }
    index = index * parent_cardinalities_[i] + parent_states[i];
  }
  return index;
}

std::span<const double> Cpt::row(std::size_t index) const {
  if (index >= row_count()) throw InferenceError("Cpt: row out of range");
  return std::span<const double>(table_).subspan(index * cardinality_,
                                                 cardinality_);
}

double Cpt::probability(std::span<const StateIndex> parent_states,
                        StateIndex state) const {
  if (state >= cardinality_) throw InferenceError("Cpt: state out of range");
  return table_[row_index(parent_states) * cardinality_ + state];
}

double Cpt::probability_in(std::span<const StateIndex> full_assignment) const {
  std::size_t index = 0;
  for (std::size_t i = 0; i < parents_.size(); ++i) {
    index = index * parent_cardinalities_[i] +
            full_assignment[parents_[i].index];
  }
  return table_[index * cardinality_ + full_assignment[owner_.index]];
}

Evidence Evidence::from_labels(
    const Network& net,
    std::span<const std::pair<std::string, std::string>> observed) {
  Evidence evidence;
  for (const auto& [name, label] : observed) {
    const VarId v = net.id(name);
    if (evidence.contains(v)) {
      throw InferenceError("variable '" + name + "' observed more than once");
    }
    evidence.set(v, net.state(v, label));
  }
  return evidence;
}

std::optional<StateIndex> Evidence::get(VarId v) const {
  if (auto it = observed_.find(v); it != observed_.end()) return it->second;
  return std::nullopt;
}

std::optional<VarId> Network::find(std::string_view name) const {
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    if (variables_[i].name == name) return VarId{i};
  }
  return std::nullopt;
}

VarId Network::id(std::string_view name) const {
  if (auto v = find(name)) return *v;
  throw InferenceError("unknown variable '" + std::string(name) + "'");
}

std::optional<StateIndex> Network::find_state(VarId v,
                                              std::string_view label) const {
  const auto& states = variable(v).states;
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (states[s] == label) return s;
  }
  return std::nullopt;
}

StateIndex Network::state(VarId v, std::string_view label) const {
  if (auto s = find_state(v, label)) return *s;
  throw InferenceError("variable '" + variable(v).name + "' has no state '" +
                       std::string(label) + "'");
}

std::uint64_t Network::configuration_count() const noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t count = 1;
  for (const auto& v : variables_) {
    const auto c = static_cast<std::uint64_t>(v.cardinality());
    if (c != 0 && count > kMax / c) return kMax;
    count *= c;
  }
  return count;
}

Network assemble_network(std::string name, std::vector<Variable> variables,
                         std::vector<Cpt> cpts,
                         std::map<std::string, std::string> metadata) {
  Network net;
  net.name_ = std::move(name);
  net.variables_ = std::move(variables);
  net.cpts_ = std::move(cpts);
  net.metadata_ = std::move(metadata);
  return net;
}

std::uint64_t configuration_index(const Network& net, const Assignment& a) {
  if (a.size() != net.size()) {
    throw InferenceError("assignment covers " + std::to_string(a.size()) +
                         " of " + std::to_string(net.size()) + " variables");
  }
  std::uint64_t index = 0;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const auto card = net.cardinality(VarId{i});
    if (a.states()[i] >= card) {
      throw InferenceError("state index out of range for '" +
                           net.variable(VarId{i}).name + "'");
    }
    index = index * card + a.states()[i];
  }
  return index;
}

Assignment assignment_at(const Network& net, std::uint64_t index) {
  if (index >= net.configuration_count()) {
    throw InferenceError("configuration index out of range");
  }
  std::vector<StateIndex> states(net.size());
  for (std::size_t i = net.size(); i-- > 0;) {
    const auto card = net.cardinality(VarId{i});
    states[i] = static_cast<StateIndex>(index % card);
    index /= card;
  }
  return Assignment(std::move(states));
}

}  // namespace qbn
