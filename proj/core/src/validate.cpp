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

#include "qbn/validate.hpp"

#include <cmath>
#include <map>
#include <optional>
#include <set>

#include "qbn/error.hpp"

namespace qbn {

namespace {

constexpr std::size_t kMaxEnumeratedRows = std::size_t{1} << 22;

std::string pointer(std::initializer_list<std::string_view> tokens) {
  std::string out;
  for (auto t : tokens) {
    out += '/';
    out += pointer_token(t);
  }
  return out;
}

// Calls fn(digits) for every tuple in mixed radix, first digit slowest.
template <typename Fn>
void for_each_tuple(std::span<const std::size_t> radices, Fn&& fn) {
  std::vector<std::size_t> digits(radices.size(), 0);
  for (auto r : radices) {
    if (r == 0) return;
  }
  while (true) {
    fn(std::span<const std::size_t>(digits));
    std::size_t i = digits.size();
    while (i > 0) {
      --i;
      if (++digits[i] < radices[i]) break;
      digits[i] = 0;
      if (i == 0) return;
    }
    if (digits.empty()) return;
  }
}

std::string join_labels(const std::vector<const NetworkDocument::VariableDecl*>& parents,
                        std::span<const std::size_t> digits) {
  std::string key;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i > 0) key += kParentKeySeparator;
    key += parents[i]->states[digits[i]];
  }
  return key;
}

struct Resolved {
  std::map<std::string, std::size_t> index;  // name -> declaration index
  // parents[i]: declaration indices, only if every parent resolved
  std::vector<std::optional<std::vector<std::size_t>>> parents;
};

// Topological order, ties by declaration index; nullopt if cyclic. Also
// returns the nodes left on a cycle.
std::pair<std::optional<std::vector<std::size_t>>, std::vector<std::size_t>>
canonical_order(std::size_t n,
                const std::vector<std::optional<std::vector<std::size_t>>>& parents) {
  std::vector<std::size_t> indegree(n, 0);
  std::vector<std::vector<std::size_t>> children(n);
  for (std::size_t v = 0; v < n; ++v) {
    if (!parents[v]) continue;
    for (auto p : *parents[v]) {
      children[p].push_back(v);
      ++indegree[v];
    }
  }
  std::set<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] == 0) ready.insert(v);
  }
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    const auto v = *ready.begin();
    ready.erase(ready.begin());
    order.push_back(v);
    for (auto c : children[v]) {
      if (--indegree[c] == 0) ready.insert(c);
    }
  }
  if (order.size() == n) return {order, {}};
  std::vector<std::size_t> stuck;
  for (std::size_t v = 0; v < n; ++v) {
    if (indegree[v] > 0) stuck.push_back(v);
  }
  return {std::nullopt, stuck};
}

Resolved resolve(const NetworkDocument& doc, std::vector<Violation>& out) {
  Resolved r;
  const auto n = doc.variables.size();

  for (std::size_t i = 0; i < n; ++i) {
    const auto& var = doc.variables[i];
    const auto at = pointer({"variables", std::to_string(i)});
    if (var.name.empty()) {
      out.push_back({ViolationCode::EmptyName, at + "/name",
                     "variable name is empty"});
    }
    if (!r.index.emplace(var.name, i).second) {
      out.push_back({ViolationCode::DuplicateVariable, at + "/name",
                     "variable '" + var.name + "' declared more than once"});
    }
    if (var.states.empty()) {
      out.push_back({ViolationCode::NoStates, at + "/states",
                     "variable '" + var.name + "' has no states"});
    }
    std::set<std::string_view> seen;
    for (std::size_t s = 0; s < var.states.size(); ++s) {
      const auto& label = var.states[s];
      const auto sat = at + "/states/" + std::to_string(s);
      if (!seen.insert(label).second) {
        out.push_back({ViolationCode::DuplicateState, sat,
                       "state '" + label + "' repeated in '" + var.name + "'"});
      }
      if (label.find(kParentKeySeparator) != std::string::npos) {
        out.push_back({ViolationCode::InvalidStateLabel, sat,
                       "state '" + label + "' contains the row-key separator '|'"});
      }
    }
  }

  for (const auto& [child, _] : doc.parents) {
    if (!r.index.contains(child)) {
      out.push_back({ViolationCode::UnknownVariable, pointer({"parents", child}),
                     "parents listed for unknown variable '" + child + "'"});
    }
  }

  r.parents.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = doc.variables[i].name;
    auto it = doc.parents.find(name);
    if (it == doc.parents.end()) {
      r.parents[i] = std::vector<std::size_t>{};
      continue;
    }
    std::vector<std::size_t> ids;
    bool ok = true;
    std::set<std::string_view> seen;
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      const auto& parent = it->second[k];
      const auto at = pointer({"parents", name, std::to_string(k)});
      auto pit = r.index.find(parent);
      if (pit == r.index.end()) {
        out.push_back({ViolationCode::UnknownParent, at,
                       "unknown parent '" + parent + "' of '" + name + "'"});
        ok = false;
        continue;
      }
      if (!seen.insert(parent).second) {
        out.push_back({ViolationCode::DuplicateParent, at,
                       "parent '" + parent + "' repeated for '" + name + "'"});
        ok = false;
        continue;
      }
      ids.push_back(pit->second);
    }
    if (ok) r.parents[i] = std::move(ids);
  }
  return r;
}

void check_cpts(const NetworkDocument& doc, const Resolved& r,
                std::vector<Violation>& out) {
  for (const auto& [owner, _] : doc.cpt) {
    if (!r.index.contains(owner)) {
      out.push_back({ViolationCode::UnknownVariable, pointer({"cpt", owner}),
                     "CPT given for unknown variable '" + owner + "'"});
    }
  }

  for (std::size_t i = 0; i < doc.variables.size(); ++i) {
    const auto& var = doc.variables[i];
    auto it = doc.cpt.find(var.name);
    if (it == doc.cpt.end()) {
      out.push_back({ViolationCode::MissingCpt, pointer({"cpt", var.name}),
                     "no CPT for '" + var.name + "'"});
      continue;
    }
    const auto& rows = it->second;

    for (const auto& [key, row] : rows) {
      const auto at = pointer({"cpt", var.name, key});
      if (row.size() != var.states.size()) {
        out.push_back({ViolationCode::RowLength, at,
                       "row has " + std::to_string(row.size()) +
                           " entries, '" + var.name + "' has " +
                           std::to_string(var.states.size()) + " states"});
      }
      bool in_range = true;
      double sum = 0.0;
      for (double p : row) {
        if (!std::isfinite(p) || p < 0.0 || p > 1.0) in_range = false;
        sum += p;
      }
      if (!in_range) {
        out.push_back({ViolationCode::EntryOutOfRange, at,
                       "row entries must lie in [0, 1]"});
      } else if (std::abs(sum - 1.0) > kRowTolerance) {
        out.push_back({ViolationCode::RowNotNormalized, at,
                       "row sums to " + std::to_string(sum) + ", not 1"});
      }
    }

    if (!r.parents[i]) continue;
    std::vector<const NetworkDocument::VariableDecl*> parents;
    std::vector<std::size_t> radices;
    std::size_t expected = 1;
    bool too_many = false;
    for (auto p : *r.parents[i]) {
      parents.push_back(&doc.variables[p]);
      radices.push_back(doc.variables[p].states.size());
      if (radices.back() != 0 && expected > kMaxEnumeratedRows / radices.back()) {
        too_many = true;
      }
      expected *= radices.back();
    }
    if (too_many) {
      out.push_back({ViolationCode::MissingRow, pointer({"cpt", var.name}),
                     "CPT of '" + var.name + "' needs more rows than supported"});
      continue;
    }
    std::set<std::string> keys;
    for_each_tuple(radices, [&](std::span<const std::size_t> digits) {
      auto key = join_labels(parents, digits);
      if (!rows.contains(key)) {
        out.push_back({ViolationCode::MissingRow, pointer({"cpt", var.name, key}),
                       "missing row \"" + key + "\" in CPT of '" + var.name + "'"});
      }
      keys.insert(std::move(key));
    });
    for (const auto& [key, _] : rows) {
      if (!keys.contains(key)) {
        out.push_back({ViolationCode::UnknownRow, pointer({"cpt", var.name, key}),
                       "row \"" + key + "\" matches no parent-state tuple of '" +
                           var.name + "'"});
      }
    }
  }
}

}  // namespace

std::string_view to_string(ViolationCode code) {
  switch (code) {
    case ViolationCode::EmptyName: return "EmptyName";
    case ViolationCode::DuplicateVariable: return "DuplicateVariable";
    case ViolationCode::NoStates: return "NoStates";
    case ViolationCode::DuplicateState: return "DuplicateState";
    case ViolationCode::InvalidStateLabel: return "InvalidStateLabel";
    case ViolationCode::UnknownVariable: return "UnknownVariable";
    case ViolationCode::UnknownParent: return "UnknownParent";
    case ViolationCode::DuplicateParent: return "DuplicateParent";
    case ViolationCode::CycleDetected: return "CycleDetected";
    case ViolationCode::MissingCpt: return "MissingCpt";
    case ViolationCode::MissingRow: return "MissingRow";
    case ViolationCode::UnknownRow: return "UnknownRow";
    case ViolationCode::RowLength: return "RowLength";
    case ViolationCode::EntryOutOfRange: return "EntryOutOfRange";
    case ViolationCode::RowNotNormalized: return "RowNotNormalized";
  }
  return "Unknown";
}

std::string format(const Violation& v) {
  return std::string(to_string(v.code)) + " " + v.path + ": " + v.message;
}

std::vector<Violation> validate(const NetworkDocument& doc) {
  std::vector<Violation> out;
  const auto r = resolve(doc, out);

  const auto [order, stuck] = canonical_order(doc.variables.size(), r.parents);
  if (!order) {
    std::string names;
    for (auto v : stuck) {
      if (!names.empty()) names += ", ";
      names += doc.variables[v].name;
    }
    out.push_back({ViolationCode::CycleDetected, "/parents",
                   "parent relation has a cycle through: " + names});
  }

  check_cpts(doc, r, out);
  return out;
}

std::vector<Violation> validate(const Network& net) {
  return validate(to_document(net));
}

Network build_network(const NetworkDocument& doc) {
  std::vector<Violation> violations;
  const auto r = resolve(doc, violations);
  if (violations.empty()) check_cpts(doc, r, violations);
  const auto [order, stuck] = canonical_order(doc.variables.size(), r.parents);
  if (!order || !violations.empty()) {
    throw ValidationError(validate(doc));
  }

  const auto n = doc.variables.size();
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[(*order)[k]] = k;

  std::vector<Variable> variables;
  std::vector<Cpt> cpts;
  variables.reserve(n);
  cpts.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto decl_index = (*order)[k];
    const auto& decl = doc.variables[decl_index];
    variables.push_back({decl.name, decl.states});

    std::vector<VarId> parent_ids;
    std::vector<std::size_t> radices;
    std::vector<const NetworkDocument::VariableDecl*> parents;
    for (auto p : *r.parents[decl_index]) {
      parent_ids.push_back(VarId{position[p]});
      radices.push_back(doc.variables[p].states.size());
      parents.push_back(&doc.variables[p]);
    }
    const auto& rows = doc.cpt.at(decl.name);
    std::vector<double> table;
    for_each_tuple(radices, [&](std::span<const std::size_t> digits) {
      const auto& row = rows.at(join_labels(parents, digits));
      table.insert(table.end(), row.begin(), row.end());
    });
    cpts.emplace_back(VarId{k}, std::move(parent_ids), std::move(radices),
                      decl.states.size(), std::move(table));
  }
  return assemble_network(doc.name, std::move(variables), std::move(cpts),
                          doc.metadata);
}

}  // namespace qbn
