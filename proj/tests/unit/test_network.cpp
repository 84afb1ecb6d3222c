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

#include <random>
#include <set>

#include "qbn/builtin.hpp"
#include "qbn/error.hpp"
#include "qbn/network.hpp"
#include "random_network.hpp"

using namespace qbn;

TEST_CASE("canonical order is topological with declaration-order ties") {
  NetworkDocument doc;
  doc.name = "order";
  doc.variables = {{"C", {"a", "b"}}, {"A", {"a", "b"}}, {"B", {"a", "b"}}};
  doc.parents = {{"C", {"B"}}, {"B", {"A"}}};
  doc.cpt["A"] = {{"", {0.5, 0.5}}};
  doc.cpt["B"] = {{"a", {0.5, 0.5}}, {"b", {0.5, 0.5}}};
  doc.cpt["C"] = {{"a", {0.5, 0.5}}, {"b", {0.5, 0.5}}};
  const auto net = build_network(doc);
  REQUIRE(net.size() == 3);
  CHECK(net.variable(VarId{0}).name == "A");
  CHECK(net.variable(VarId{1}).name == "B");
  CHECK(net.variable(VarId{2}).name == "C");

  doc.parents.clear();
  doc.cpt["B"] = {{"", {0.5, 0.5}}};
  doc.cpt["C"] = {{"", {0.5, 0.5}}};
  const auto flat = build_network(doc);
  CHECK(flat.variable(VarId{0}).name == "C");
  CHECK(flat.variable(VarId{1}).name == "A");
}

TEST_CASE("configuration index is a bijection in mixed radix") {
  NetworkDocument doc;
  doc.name = "radix";
  doc.variables = {{"A", {"0", "1", "2"}}, {"B", {"0", "1"}}, {"C", {"0", "1", "2", "3"}}};
  doc.cpt["A"] = {{"", {0.2, 0.3, 0.5}}};
  doc.cpt["B"] = {{"", {0.5, 0.5}}};
  doc.cpt["C"] = {{"", {0.25, 0.25, 0.25, 0.25}}};
  const auto net = build_network(doc);
  REQUIRE(net.configuration_count() == 24);

  CHECK(configuration_index(net, Assignment({1, 0, 2})) == 1 * 8 + 0 * 4 + 2);
  std::set<std::vector<StateIndex>> seen;
  for (std::uint64_t k = 0; k < net.configuration_count(); ++k) {
    const auto a = assignment_at(net, k);
    CHECK(configuration_index(net, a) == k);
    seen.insert({a.states().begin(), a.states().end()});
  }
  CHECK(seen.size() == 24);
  CHECK_THROWS_AS(assignment_at(net, 24), InferenceError);
  CHECK_THROWS_AS(configuration_index(net, Assignment({1, 0})), InferenceError);
  CHECK_THROWS_AS(configuration_index(net, Assignment({3, 0, 0})), InferenceError);
}

TEST_CASE("cpt rows follow declared parent order, first parent most significant") {
  NetworkDocument doc;
  doc.name = "two-parents";
  doc.variables = {{"P", {"p0", "p1"}}, {"Q", {"q0", "q1", "q2"}}, {"X", {"x0", "x1"}}};
  doc.parents = {{"X", {"Q", "P"}}};
  doc.cpt["P"] = {{"", {0.5, 0.5}}};
  doc.cpt["Q"] = {{"", {0.2, 0.3, 0.5}}};
  for (const char* q : {"q0", "q1", "q2"}) {
    for (const char* p : {"p0", "p1"}) {
      const double v = 0.1 * (q[1] - '0') + 0.05 * (p[1] - '0');
      doc.cpt["X"][std::string(q) + "|" + p] = {v, 1.0 - v};
    }
  }
  const auto net = build_network(doc);
  const auto& cpt = net.cpt(net.id("X"));
  REQUIRE(cpt.parents().size() == 2);
  CHECK(cpt.parents()[0] == net.id("Q"));
  CHECK(cpt.row_count() == 6);
  const std::vector<StateIndex> q2p1 = {2, 1};
  CHECK(cpt.row_index(q2p1) == 5);
  CHECK(cpt.probability(q2p1, 0) == doctest::Approx(0.25));
  CHECK(row_key(net, net.id("X"), q2p1) == "q2|p1");
}

TEST_CASE("evidence from labels") {
  const auto net = builtin("burglar");
  const std::vector<std::pair<std::string, std::string>> ok = {{"Alarm", "t"},
                                                               {"MaryCalls", "f"}};
  const auto e = Evidence::from_labels(net, ok);
  CHECK(e.size() == 2);
  CHECK(e.get(net.id("Alarm")) == StateIndex{0});
  CHECK(e.get(net.id("MaryCalls")) == StateIndex{1});
  CHECK_FALSE(e.get(net.id("Burglar")).has_value());

  const std::vector<std::pair<std::string, std::string>> bad_name = {{"Earthquake", "t"}};
  CHECK_THROWS_AS(Evidence::from_labels(net, bad_name), InferenceError);
  const std::vector<std::pair<std::string, std::string>> bad_label = {{"Alarm", "maybe"}};
  CHECK_THROWS_AS(Evidence::from_labels(net, bad_label), InferenceError);
  const std::vector<std::pair<std::string, std::string>> twice = {{"Alarm", "t"}, {"Alarm", "f"}};
  CHECK_THROWS_AS(Evidence::from_labels(net, twice), InferenceError);
}

TEST_CASE("random networks keep parents before children") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const auto net = testing::random_binary_network(rng);
    for (std::size_t v = 0; v < net.size(); ++v) {
      for (auto p : net.cpt(VarId{v}).parents()) CHECK(p.index < v);
    }
  }
}
