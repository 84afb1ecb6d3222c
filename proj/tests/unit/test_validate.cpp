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

#include <doctest.h>

#include <algorithm>

#include "qbn/builtin.hpp"
#include "qbn/error.hpp"
#include "qbn/validate.hpp"

using namespace qbn;

namespace {

NetworkDocument two_binary() {
  NetworkDocument doc;
  doc.name = "ab";
  doc.variables = {{"A", {"t", "f"}}, {"B", {"t", "f"}}};
  doc.parents = {{"B", {"A"}}};
  doc.cpt["A"] = {{"", {0.5, 0.5}}};
  doc.cpt["B"] = {{"t", {0.9, 0.1}}, {"f", {0.2, 0.8}}};
  return doc;
}

std::vector<ViolationCode> codes(const std::vector<Violation>& vs) {
  std::vector<ViolationCode> out;
  for (const auto& v : vs) out.push_back(v.code);
  return out;
}

}  // namespace

TEST_CASE("builtins validate cleanly") {
  for (auto name : builtin_names()) {
    CAPTURE(name);
    CHECK(validate(builtin(name)).empty());
    CHECK(validate(builtin_document(name)).empty());
  }
}

TEST_CASE("two-node cycle") {
  auto doc = two_binary();
  doc.parents["A"] = {"B"};
  doc.cpt["A"] = {{"t", {0.5, 0.5}}, {"f", {0.5, 0.5}}};
  const auto vs = validate(doc);
  CHECK(codes(vs) == std::vector{ViolationCode::CycleDetected});
  CHECK(vs[0].message.find("A, B") != std::string::npos);
  CHECK_THROWS_AS(build_network(doc), ValidationError);
}

TEST_CASE("self loop is a cycle") {
  auto doc = two_binary();
  doc.parents["A"] = {"A"};
  doc.cpt["A"] = {{"t", {0.5, 0.5}}, {"f", {0.5, 0.5}}};
  CHECK(codes(validate(doc)) == std::vector{ViolationCode::CycleDetected});
}

TEST_CASE("row [0.6, 0.6] is not normalized") {
  auto doc = two_binary();
  doc.cpt["B"]["t"] = {0.6, 0.6};
  const auto vs = validate(doc);
  REQUIRE(codes(vs) == std::vector{ViolationCode::RowNotNormalized});
  CHECK(vs[0].path == "/cpt/B/t");
}

TEST_CASE("row tolerance is 1e-9") {
  auto doc = two_binary();
  doc.cpt["B"]["t"] = {0.9, 0.1 + 5e-10};
  CHECK(validate(doc).empty());
  doc.cpt["B"]["t"] = {0.9, 0.1 + 5e-9};
  CHECK(codes(validate(doc)) == std::vector{ViolationCode::RowNotNormalized});
}

TEST_CASE("missing, unknown and mis-sized rows") {
  auto doc = two_binary();
  doc.cpt["B"].erase("f");
  doc.cpt["B"]["maybe"] = {0.5, 0.5};
  doc.cpt["A"][""] = {0.2, 0.3, 0.5};
  const auto vs = validate(doc);
  CHECK(codes(vs) == std::vector{ViolationCode::RowLength, ViolationCode::MissingRow,
                                 ViolationCode::UnknownRow});
  CHECK(vs[1].path == "/cpt/B/f");
  CHECK(vs[2].path == "/cpt/B/maybe");
}

TEST_CASE("names, states and parents") {
  auto doc = two_binary();
  doc.variables.push_back({"A", {"x"}});
  doc.variables.push_back({"", {"x"}});
  doc.variables.push_back({"E", {}});
  doc.variables.push_back({"P", {"a|b", "c"}});
  doc.parents["B"] = {"A", "A", "Ghost"};
  doc.cpt["Nobody"] = {{"", {1.0}}};
  const auto c = codes(validate(doc));
  auto has = [&](ViolationCode code) {
    return std::find(c.begin(), c.end(), code) != c.end();
  };
  CHECK(has(ViolationCode::DuplicateVariable));
  CHECK(has(ViolationCode::EmptyName));
  CHECK(has(ViolationCode::NoStates));
  CHECK(has(ViolationCode::InvalidStateLabel));
  CHECK(has(ViolationCode::DuplicateParent));
  CHECK(has(ViolationCode::UnknownParent));
  CHECK(has(ViolationCode::UnknownVariable));
  CHECK(has(ViolationCode::MissingCpt));
}

TEST_CASE("violation formatting") {
  const Violation v{ViolationCode::CycleDetected, "/parents", "cycle"};
  CHECK(format(v) == "CycleDetected /parents: cycle");
}
