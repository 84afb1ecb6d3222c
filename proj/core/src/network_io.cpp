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

#include "qbn/network_io.hpp"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "qbn/error.hpp"

namespace qbn {

namespace {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

const json& require(const json& obj, const char* key, const std::string& at) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(at, std::string("missing key '") + key + "'");
  return *it;
}

std::string as_string(const json& j, const std::string& at) {
  if (!j.is_string()) throw ParseError(at, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> as_strings(const json& j, const std::string& at) {
  if (!j.is_array()) throw ParseError(at, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(as_string(j[i], at + "/" + std::to_string(i)));
  }
  return out;
}

const json& as_object(const json& j, const std::string& at) {
  if (!j.is_object()) throw ParseError(at, "expected an object");
  return j;
}

}  // namespace

std::string pointer_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

NetworkDocument parse_document(std::string_view text) {
  json root;
  try {
    root = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError("", std::string("malformed JSON: ") + e.what());
  }
  as_object(root, "");

  static const std::set<std::string> kKnown = {"name", "variables", "parents",
                                               "cpt", "metadata"};
  for (const auto& [key, _] : root.items()) {
    if (!kKnown.contains(key)) throw ParseError("/" + pointer_token(key), "unknown key");
  }

  NetworkDocument doc;
  doc.name = as_string(require(root, "name", ""), "/name");

  const auto& vars = require(root, "variables", "");
  if (!vars.is_array()) throw ParseError("/variables", "expected an array");
  for (std::size_t i = 0; i < vars.size(); ++i) {
    const auto at = "/variables/" + std::to_string(i);
    const auto& v = as_object(vars[i], at);
    for (const auto& [key, _] : v.items()) {
      if (key != "name" && key != "states") {
        throw ParseError(at + "/" + pointer_token(key), "unknown key");
      }
    }
    doc.variables.push_back({as_string(require(v, "name", at), at + "/name"),
                             as_strings(require(v, "states", at), at + "/states")});
  }

  const auto& parents = as_object(require(root, "parents", ""), "/parents");
  for (const auto& [child, list] : parents.items()) {
    doc.parents[child] = as_strings(list, "/parents/" + pointer_token(child));
  }

  const auto& cpt = as_object(require(root, "cpt", ""), "/cpt");
  for (const auto& [owner, rows] : cpt.items()) {
    const auto at = "/cpt/" + pointer_token(owner);
    auto& out = doc.cpt[owner];
    for (const auto& [key, row] : as_object(rows, at).items()) {
      const auto rat = at + "/" + pointer_token(key);
      if (!row.is_array()) throw ParseError(rat, "expected an array of numbers");
      std::vector<double> values;
      for (std::size_t i = 0; i < row.size(); ++i) {
        if (!row[i].is_number()) {
          throw ParseError(rat + "/" + std::to_string(i), "expected a number");
        }
        values.push_back(row[i].get<double>());
      }
      out[key] = std::move(values);
    }
  }

  if (auto it = root.find("metadata"); it != root.end()) {
    for (const auto& [key, value] : as_object(*it, "/metadata").items()) {
      doc.metadata[key] = as_string(value, "/metadata/" + pointer_token(key));
    }
  }
  return doc;
}

Network parse_network(std::string_view text) {
  return build_network(parse_document(text));
}

std::string row_key(const Network& net, VarId v,
                    std::span<const StateIndex> parent_states) {
  const auto parents = net.cpt(v).parents();
  std::string key;
  for (std::size_t i = 0; i < parents.size(); ++i) {
    if (i > 0) key += kParentKeySeparator;
    key += net.variable(parents[i]).states.at(parent_states[i]);
  }
  return key;
}

namespace {

// Calls fn(parent_states, row) for each CPT row of v in table order.
template <typename Fn>
void for_each_row(const Network& net, VarId v, Fn&& fn) {
  const auto& cpt = net.cpt(v);
  const auto parents = cpt.parents();
  std::vector<StateIndex> states(parents.size(), 0);
  for (std::size_t r = 0; r < cpt.row_count(); ++r) {
    auto rest = r;
    for (std::size_t i = parents.size(); i-- > 0;) {
      const auto card = net.cardinality(parents[i]);
      states[i] = rest % card;
      rest /= card;
    }
    fn(std::span<const StateIndex>(states), cpt.row(r));
  }
}

}  // namespace

NetworkDocument to_document(const Network& net) {
  NetworkDocument doc;
  doc.name = net.name();
  doc.metadata = net.metadata();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const VarId v{i};
    const auto& var = net.variable(v);
    doc.variables.push_back({var.name, var.states});
    auto& parents = doc.parents[var.name];
    for (auto p : net.cpt(v).parents()) parents.push_back(net.variable(p).name);
    auto& rows = doc.cpt[var.name];
    for_each_row(net, v, [&](std::span<const StateIndex> ps, std::span<const double> row) {
      rows[row_key(net, v, ps)] = std::vector<double>(row.begin(), row.end());
    });
  }
  return doc;
}

std::string serialize_document(const NetworkDocument& doc) {
  ordered_json root;
  root["name"] = doc.name;
  root["variables"] = ordered_json::array();
  for (const auto& v : doc.variables) {
    root["variables"].push_back({{"name", v.name}, {"states", v.states}});
  }
  root["parents"] = ordered_json::object();
  for (const auto& [child, list] : doc.parents) root["parents"][child] = list;
  root["cpt"] = ordered_json::object();
  for (const auto& [owner, rows] : doc.cpt) {
    auto& out = root["cpt"][owner];
    out = ordered_json::object();
    for (const auto& [key, row] : rows) out[key] = row;
  }
  if (!doc.metadata.empty()) root["metadata"] = doc.metadata;
  return root.dump(2) + "\n";
}

std::string serialize_network(const Network& net) {
  // Written directly (rather than via NetworkDocument) so that variables,
  // parents and rows appear in canonical/table order.
  ordered_json root;
  root["name"] = net.name();
  root["variables"] = ordered_json::array();
  root["parents"] = ordered_json::object();
  root["cpt"] = ordered_json::object();
  for (std::size_t i = 0; i < net.size(); ++i) {
    const VarId v{i};
    const auto& var = net.variable(v);
    root["variables"].push_back({{"name", var.name}, {"states", var.states}});
    auto parents = ordered_json::array();
    for (auto p : net.cpt(v).parents()) parents.push_back(net.variable(p).name);
    root["parents"][var.name] = std::move(parents);
    auto rows = ordered_json::object();
    for_each_row(net, v, [&](std::span<const StateIndex> ps, std::span<const double> row) {
      rows[row_key(net, v, ps)] = std::vector<double>(row.begin(), row.end());
    });
    root["cpt"][var.name] = std::move(rows);
  }
  if (!net.metadata().empty()) {
    root["metadata"] = ordered_json::object();
    for (const auto& [k, val] : net.metadata()) root["metadata"][k] = val;
  }
  return root.dump(2) + "\n";
}

std::string read_text_file(const std::string& path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec)) {
    throw IoError("cannot read '" + path + "': not a regular file");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("error reading '" + path + "'");
  return buffer.str();
}

Network load_network_file(const std::string& path) {
  return parse_network(read_text_file(path));
}

}  // namespace qbn
