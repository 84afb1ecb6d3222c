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

#ifndef QBN_NETWORK_HPP
#define QBN_NETWORK_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qbn {

using StateIndex = std::size_t;

/// Position of a variable in a network's canonical order.
struct VarId {
  std::size_t index = 0;

  friend auto operator<=>(const VarId&, const VarId&) = default;
};

struct Variable {
  std::string name;
  std::vector<std::string> states;

  std::size_t cardinality() const noexcept { return states.size(); }
  friend bool operator==(const Variable&, const Variable&) = default;
};

/// Conditional probability table of one variable.
///
/// Rows are indexed by the parent-state tuple in mixed radix, first parent
/// most significant. Each row holds one probability per owner state.
class Cpt {
 public:
  Cpt() = default;
  Cpt(VarId owner, std::vector<VarId> parents,
      std::vector<std::size_t> parent_cardinalities, std::size_t cardinality,
      std::vector<double> table);

  VarId owner() const noexcept { return owner_; }
  std::span<const VarId> parents() const noexcept { return parents_; }
  std::size_t cardinality() const noexcept { return cardinality_; }
  std::size_t row_count() const noexcept;

  std::size_t row_index(std::span<const StateIndex> parent_states) const;
  std::span<const double> row(std::size_t index) const;

  double probability(std::span<const StateIndex> parent_states,
                     StateIndex state) const;

  /// Looks the owner's state and its parents' states up in a total
  /// assignment given in canonical order.
  double probability_in(std::span<const StateIndex> full_assignment) const;

  friend bool operator==(const Cpt&, const Cpt&) = default;

 private:
  VarId owner_{};
  std::vector<VarId> parents_;
  std::vector<std::size_t> parent_cardinalities_;
  std::size_t cardinality_ = 0;
  std::vector<double> table_;
};

/// Total mapping variable -> state, stored in canonical variable order.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<StateIndex> states)
      : states_(std::move(states)) {}

  StateIndex operator[](VarId v) const { return states_.at(v.index); }
  std::size_t size() const noexcept { return states_.size(); }
  std::span<const StateIndex> states() const noexcept { return states_; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::vector<StateIndex> states_;
};

class Network;

/// Partial mapping variable -> state.
class Evidence {
 public:
  using Map = std::map<VarId, StateIndex>;

  Evidence() = default;
  Evidence(std::initializer_list<Map::value_type> observed)
      : observed_(observed) {}

  /// Resolves `Var=Label` pairs against a network; throws InferenceError on
  /// unknown names or labels and on a variable observed twice.
  static Evidence from_labels(
      const Network& net,
      std::span<const std::pair<std::string, std::string>> observed);

  void set(VarId v, StateIndex s) { observed_[v] = s; }
  bool contains(VarId v) const { return observed_.contains(v); }
  std::optional<StateIndex> get(VarId v) const;
  std::size_t size() const noexcept { return observed_.size(); }
  bool empty() const noexcept { return observed_.empty(); }

  Map::const_iterator begin() const { return observed_.begin(); }
  Map::const_iterator end() const { return observed_.end(); }

  friend bool operator==(const Evidence&, const Evidence&) = default;

 private:
  Map observed_;
};

/// Validated, immutable discrete Bayesian network.
///
/// Variables are stored in canonical order: topological, ties broken by
/// declaration order. Every configuration index in the library is the
/// mixed-radix number of an assignment in this order, last variable fastest.
/// Instances are produced by build_network() (see network_io.hpp).
class Network {
 public:
  Network() = default;

  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return variables_.size(); }
  std::span<const Variable> variables() const noexcept { return variables_; }
  const Variable& variable(VarId v) const { return variables_.at(v.index); }
  std::size_t cardinality(VarId v) const { return variable(v).cardinality(); }
  const Cpt& cpt(VarId v) const { return cpts_.at(v.index); }
  const std::map<std::string, std::string>& metadata() const noexcept {
    return metadata_;
  }

  std::optional<VarId> find(std::string_view name) const;
  /// Like find() but throws InferenceError for unknown names.
  VarId id(std::string_view name) const;
  std::optional<StateIndex> find_state(VarId v, std::string_view label) const;
  /// Like find_state() but throws InferenceError for unknown labels.
  StateIndex state(VarId v, std::string_view label) const;

  /// Number of joint configurations, saturating at UINT64_MAX.
  std::uint64_t configuration_count() const noexcept;

  friend bool operator==(const Network&, const Network&) = default;

 private:
  friend Network assemble_network(std::string, std::vector<Variable>,
                                  std::vector<Cpt>,
                                  std::map<std::string, std::string>);

  std::string name_;
  std::vector<Variable> variables_;
  std::vector<Cpt> cpts_;
  std::map<std::string, std::string> metadata_;
};

/// Internal constructor used once validation has succeeded.
Network assemble_network(std::string name, std::vector<Variable> variables,
                         std::vector<Cpt> cpts,
                         std::map<std::string, std::string> metadata);

/// Canonical configuration index of a total assignment.
std::uint64_t configuration_index(const Network& net, const Assignment& a);

/// Inverse of configuration_index().
Assignment assignment_at(const Network& net, std::uint64_t index);

}  // namespace qbn

#endif  // QBN_NETWORK_HPP
