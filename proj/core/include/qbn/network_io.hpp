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

#ifndef QBN_NETWORK_IO_HPP
#define QBN_NETWORK_IO_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "qbn/network.hpp"

namespace qbn {

/// Unvalidated mirror of the JSON network format:
///
///   {
///     "name": "gamble",
///     "variables": [{"name": "U", "states": ["Play", "Not_Play"]}, ...],
///     "parents": {"G1": ["U"], ...},
///     "cpt": {"U": {"": [0.5, 0.5]}, "G1": {"Play": [...], ...}, ...},
///     "metadata": {"cpt_status": "unverified"}          (optional)
///   }
///
/// Escapes one JSON pointer reference token ('~' -> "~0", '/' -> "~1").
std::string pointer_token(std::string_view key);

/// CPT row keys are parent state labels joined with '|', in declared parent
/// order ("" for roots). Row entries follow the owner's declared state order.
struct NetworkDocument {
  struct VariableDecl {
    std::string name;
    std::vector<std::string> states;

    friend bool operator==(const VariableDecl&, const VariableDecl&) = default;
  };

  std::string name;
  std::vector<VariableDecl> variables;
  std::map<std::string, std::vector<std::string>> parents;
  std::map<std::string, std::map<std::string, std::vector<double>>> cpt;
  std::map<std::string, std::string> metadata;

  friend bool operator==(const NetworkDocument&,
                         const NetworkDocument&) = default;
};

inline constexpr char kParentKeySeparator = '|';

/// Syntax-level parse. Throws ParseError for malformed JSON or values of the
/// wrong type; semantic problems are left to validate().
NetworkDocument parse_document(std::string_view text);

/// Validates and builds; throws ValidationError listing every violation.
Network build_network(const NetworkDocument& doc);

/// parse_document() followed by build_network().
Network parse_network(std::string_view text);

/// Document form of a network, variables in canonical order.
NetworkDocument to_document(const Network& net);

std::string serialize_document(const NetworkDocument& doc);

/// Pretty-printed JSON; parse_network(serialize_network(n)) == n.
std::string serialize_network(const Network& net);

/// Whole file contents. Throws IoError unless `path` is a readable regular
/// file.
std::string read_text_file(const std::string& path);

/// read_text_file() followed by parse_network().
Network load_network_file(const std::string& path);

/// Escapes one JSON pointer reference token ('~' -> "~0", '/' -> "~1").
std::string pointer_token(std::string_view key);

/// CPT row key for one parent-state tuple of `v`.
std::string row_key(const Network& net, VarId v,
                    std::span<const StateIndex> parent_states);

}  // namespace qbn

#endif  // QBN_NETWORK_IO_HPP
