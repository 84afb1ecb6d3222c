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

#include <cmath>
#include <numbers>

#include "qbn/builtin.hpp"
#include "qbn/classical.hpp"
#include "qbn/error.hpp"
#include "qbn/quantum.hpp"

using namespace qbn;

namespace {

constexpr double kPi = std::numbers::pi;

struct Gamble {
  Network net = builtin("gamble");
  VarId g2 = net.id("G2");
  Evidence u_play{{net.id("U"), 0}};
};

std::vector<PathAmplitude> paths_of(std::vector<double> probabilities) {
  std::vector<PathAmplitude> out;
  for (double p : probabilities) out.push_back({{}, p, std::sqrt(p)});
  return out;
}

}  // namespace

TEST_CASE("phase wrapping") {
  CHECK(wrap_phase(0.0) == 0.0);
  CHECK(wrap_phase(kTwoPi) == 0.0);
  CHECK(std::abs(wrap_phase(-0.5) - (kTwoPi - 0.5)) < 1e-15);
  CHECK(std::abs(wrap_phase(7.0) - (7.0 - kTwoPi)) < 1e-15);
  const ThetaVector t({-1.0, 10.0});
  for (double p : t.phases()) CHECK((p >= 0.0 && p < kTwoPi));
  CHECK_THROWS_AS(ThetaVector({std::nan("")}), InferenceError);
}

TEST_CASE("Born amplitude") {
  CHECK(amplitude_from_probability(0.25) == 0.5);
  CHECK(amplitude_from_probability(0.0) == 0.0);
  CHECK(std::abs(amplitude_from_probability(0.17) - 0.4123) < 5e-5);
  CHECK_THROWS_AS(amplitude_from_probability(1.5), InferenceError);
  CHECK_THROWS_AS(amplitude_from_probability(-0.1), InferenceError);
}

TEST_CASE("gamble paths for each query state") {
  Gamble g;
  const auto play = enumerate_paths(g.net, g.g2, 0, g.u_play);
  REQUIRE(play.size() == 2);
  CHECK(std::abs(play[0].probability - 0.17) < 1e-12);
  CHECK(std::abs(play[1].probability - 0.125) < 1e-12);
  CHECK(play[0].config == std::vector<StateIndex>{0});
  CHECK(std::abs(play[0].magnitude * play[0].magnitude - play[0].probability) < 1e-12);

  const auto not_play = enumerate_paths(g.net, g.g2, 1, g.u_play);
  CHECK(std::abs(not_play[0].probability - 0.08) < 1e-12);
  CHECK(std::abs(not_play[1].probability - 0.125) < 1e-12);

  const Evidence all{{g.net.id("U"), 0}, {g.net.id("G1"), 1}};
  CHECK(enumerate_paths(g.net, g.g2, 0, all).size() == 1);
  CHECK(path_count(g.net, g.g2, all) == 1);
  CHECK_THROWS_AS(enumerate_paths(g.net, g.g2, 2, g.u_play), InferenceError);
}

TEST_CASE("density diagonal") {
  const auto gamble = density_diagonal(builtin("gamble"));
  const std::vector<double> expected = {0.17, 0.08, 0.125, 0.125, 0.17, 0.08, 0.125, 0.125};
  REQUIRE(gamble.size() == 8);
  for (std::size_t k = 0; k < 8; ++k) CHECK(std::abs(gamble[k] - expected[k]) < 5e-5);

  NetworkDocument doc;
  doc.name = "coin";
  doc.variables = {{"C", {"h", "t"}}};
  doc.cpt["C"] = {{"", {0.3, 0.7}}};
  const auto coin = density_diagonal(build_network(doc));
  CHECK(std::abs(coin[0] - 0.3) < 1e-15);
  CHECK(std::abs(coin[1] - 0.7) < 1e-15);

  const auto burglar = builtin("burglar");
  const auto diagonal = density_diagonal(burglar);
  const auto table = joint_table(burglar);
  REQUIRE(diagonal.size() == table.size());
  for (std::size_t k = 0; k < table.size(); ++k) {
    CHECK(std::abs(diagonal[k] - table[k].probability) <= 1e-15);
  }
}

TEST_CASE("partial-trace marginal") {
  Gamble g;
  const auto d = marginal_partial_trace(g.net, g.g2, g.u_play);
  CHECK(std::abs(d.probabilities[0] - 0.59) < 1e-12);
  CHECK(std::abs(d.probabilities[1] - 0.41) < 1e-12);

  const auto burglar = builtin("burglar");
  const auto b = marginal_partial_trace(burglar, burglar.id("Burglar"), {});
  CHECK(std::abs(b.probabilities[0] - 0.02) < 1e-12);
  CHECK(std::abs(b.probabilities[1] - 0.98) < 1e-12);

  // Every non-query variable observed: the CPT row itself.
  const Evidence a_true{{burglar.id("Burglar"), 0}, {burglar.id("Alarm"), 0},
                        {burglar.id("JohnCalls"), 1}};
  const auto m = marginal_partial_trace(burglar, burglar.id("MaryCalls"), a_true);
  CHECK(std::abs(m.probabilities[0] - 0.7) < 1e-12);
}

TEST_CASE("interference term") {
  const auto paths = paths_of({0.17, 0.125});
  CHECK(std::abs(interference_term(paths, ThetaVector({0.0, kPi / 2}))) < 1e-15);
  // 2 √(0.17 · 0.125) = 0.2915475947...; with the 0.2 from the other state
  // this is the combined 0.4915 coefficient of the normalizer.
  const double in_phase = interference_term(paths, ThetaVector({0.0, 0.0}));
  CHECK(std::abs(in_phase - 0.29155) < 5e-6);
  CHECK(std::abs(in_phase + interference_term(paths_of({0.08, 0.125}), ThetaVector({0.0, 0.0})) -
                 0.4915) < 1e-4);
  CHECK(interference_term(paths_of({0.3}), ThetaVector({2.0})) == 0.0);
  CHECK_THROWS_AS(interference_term(paths, ThetaVector({0.0})), InferenceError);
}

TEST_CASE("quantum gamble") {
  Gamble g;
  const auto fitted = infer_quantum(g.net, g.g2, g.u_play, ThetaVector({0.0, 3.09}));
  CHECK(std::abs(fitted.distribution[0] - 0.423) <= 0.005);
  CHECK(std::round(fitted.distribution[0] * 100) / 100 == 0.42);
  const double coupling = 2.0 * std::sqrt(0.17 * 0.125) + 2.0 * std::sqrt(0.08 * 0.125);
  CHECK(fitted.alpha == doctest::Approx(1.0 / (0.5 + coupling * std::cos(3.09))).epsilon(1e-12));

  const auto orthogonal = infer_quantum(g.net, g.g2, g.u_play, ThetaVector({0.0, kPi / 2}));
  CHECK(std::abs(orthogonal.distribution[0] - 0.59) < 1e-12);
  CHECK(std::abs(orthogonal.distribution[1] - 0.41) < 1e-12);

  const auto in_phase = infer_quantum(g.net, g.g2, g.u_play, ThetaVector({0.0, 0.0}));
  CHECK(std::abs(in_phase.distribution[0] - 0.5915) < 5e-5);
  CHECK(std::abs(in_phase.states[0].classical_mass - 0.295) < 1e-12);
  CHECK(std::abs(in_phase.states[1].classical_mass - 0.205) < 1e-12);
  CHECK(std::abs(in_phase.states[0].unnormalized -
                 coherent_path_mass(enumerate_paths(g.net, g.g2, 0, g.u_play),
                                    ThetaVector({0.0, 0.0}))) < 1e-12);

  CHECK_THROWS_AS(infer_quantum(g.net, g.g2, g.u_play, ThetaVector({0.0})), InferenceError);
}

TEST_CASE("zero interference-weighted mass is an error") {
  NetworkDocument doc;
  doc.name = "cancel";
  doc.variables = {{"H", {"a", "b"}}, {"Q", {"x"}}};
  doc.parents = {{"Q", {"H"}}};
  doc.cpt["H"] = {{"", {0.5, 0.5}}};
  doc.cpt["Q"] = {{"a", {1.0}}, {"b", {1.0}}};
  const auto net = build_network(doc);
  // Two equal paths in antiphase cancel exactly.
  CHECK_THROWS_AS(infer_quantum(net, net.id("Q"), {}, ThetaVector({0.0, std::numbers::pi})),
                  ZeroMassError);
}

TEST_CASE("Feynman rules on a chain") {
  const std::vector<double> chain = {0.5, 0.5, 0.68};
  CHECK(std::abs(path_probability_single(chain) - 0.17) < 1e-15);
  CHECK(path_probability_single(std::vector<double>{}) == 1.0);
  CHECK(path_probability_single(std::vector<double>{1.0, 1.0, 1.0}) == 1.0);

  Gamble g;
  const auto play = enumerate_paths(g.net, g.g2, 0, g.u_play);
  CHECK(std::abs(multipath_probability_observed(play) - 0.295) < 1e-12);
  CHECK(multipath_probability_observed(std::vector<PathAmplitude>{}) == 0.0);
}
