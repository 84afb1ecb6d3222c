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
#include <random>

#include "oracle.hpp"
#include "qbn/classical.hpp"
#include "qbn/error.hpp"
#include "qbn/quantum.hpp"
#include "random_network.hpp"

using namespace qbn;

namespace {

struct Case {
  Network net;
  testing::RandomQuery query;
};

// Random binary networks whose evidence has positive probability.
template <typename Fn>
void for_random_cases(std::uint64_t seed, int count, Fn&& fn) {
  std::mt19937_64 rng(seed);
  int done = 0;
  while (done < count) {
    auto net = testing::random_binary_network(rng);
    auto q = testing::random_query(rng, net);
    if (!(testing::oracle_evidence_probability(net, q.evidence) > 0.0)) continue;
    fn(net, q, rng);
    ++done;
  }
}

}  // namespace

TEST_CASE("positivity of unnormalized values and normalized probabilities") {
  for_random_cases(101, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64& rng) {
    const QuantumQuery query(net, q.query, q.evidence);
    const auto thetas = testing::random_thetas(rng, query.path_count());
    try {
      const auto r = query.evaluate(thetas);
      double sum = 0.0;
      for (std::size_t s = 0; s < r.states.size(); ++s) {
        CHECK(r.states[s].classical_mass + r.states[s].interference >= -1e-12);
        CHECK(r.distribution[s] >= 0.0);
        CHECK(r.distribution[s] <= 1.0);
        sum += r.distribution[s];
      }
      CHECK(std::abs(sum - 1.0) <= 1e-9);
    } catch (const ZeroMassError&) {
      // Complete destructive interference in every state; still non-negative.
      for (StateIndex s = 0; s < query.state_count(); ++s) {
        CHECK(coherent_path_mass(query.paths(s), thetas) <= 1e-12);
      }
    }
  });
}

TEST_CASE("orthogonal phases and single paths collapse to classical") {
  for_random_cases(202, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64& rng) {
    const auto k = path_count(net, q.query, q.evidence);
    const auto classical = infer_classical(net, q.query, q.evidence);
    const double c = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    if (k == 1) {
      const auto r = infer_quantum(net, q.query, q.evidence, ThetaVector({c}));
      for (std::size_t s = 0; s < r.distribution.size(); ++s) {
        CHECK(std::abs(r.distribution[s] - classical.probabilities[s]) <= 1e-12);
      }
    } else if (k == 2) {
      const auto r = infer_quantum(net, q.query, q.evidence,
                                   ThetaVector({c, c + std::numbers::pi / 2}));
      for (std::size_t s = 0; s < r.distribution.size(); ++s) {
        CHECK(std::abs(r.distribution[s] - classical.probabilities[s]) <= 1e-12);
      }
    }
  });
}

TEST_CASE("global phase invariance") {
  for_random_cases(303, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64& rng) {
    const QuantumQuery query(net, q.query, q.evidence);
    const auto thetas = testing::random_thetas(rng, query.path_count());
    const double c = std::uniform_real_distribution<double>(-10.0, 10.0)(rng);
    try {
      const auto a = query.evaluate(thetas);
      const auto b = query.evaluate(thetas.shifted(c));
      for (std::size_t s = 0; s < a.distribution.size(); ++s) {
        CHECK(std::abs(a.distribution[s] - b.distribution[s]) <= 1e-12);
      }
    } catch (const ZeroMassError&) {
    }
  });
}

TEST_CASE("cosine-sum form agrees with the coherent form") {
  for_random_cases(404, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64& rng) {
    const QuantumQuery query(net, q.query, q.evidence);
    const auto thetas = testing::random_thetas(rng, query.path_count());
    for (StateIndex s = 0; s < query.state_count(); ++s) {
      const auto paths = query.paths(s);
      const double cosine = multipath_probability_observed(paths) + interference_term(paths, thetas);
      CHECK(std::abs(cosine - coherent_path_mass(paths, thetas)) <= 1e-12);
    }
  });
}

TEST_CASE("partial trace equals classical marginal") {
  for_random_cases(505, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64&) {
    const auto a = marginal_partial_trace(net, q.query, q.evidence);
    const auto b = infer_classical(net, q.query, q.evidence);
    for (std::size_t s = 0; s < a.probabilities.size(); ++s) {
      CHECK(std::abs(a.probabilities[s] - b.probabilities[s]) <= 1e-12);
    }
  });
}

TEST_CASE("path mass is conserved across query states") {
  for_random_cases(606, 1000, [](const Network& net, const testing::RandomQuery& q,
                                 std::mt19937_64&) {
    double mass = 0.0;
    for (StateIndex s = 0; s < net.cardinality(q.query); ++s) {
      mass += multipath_probability_observed(enumerate_paths(net, q.query, s, q.evidence));
    }
    CHECK(std::abs(mass - testing::oracle_evidence_probability(net, q.evidence)) <= 1e-12);
  });
}

TEST_CASE("observed-path sum equals classical numerator") {
  for_random_cases(707, 500, [](const Network& net, const testing::RandomQuery& q,
                                std::mt19937_64&) {
    const auto masses = testing::oracle_masses(net, q.query, q.evidence);
    for (StateIndex s = 0; s < masses.size(); ++s) {
      const auto paths = enumerate_paths(net, q.query, s, q.evidence);
      CHECK(std::abs(multipath_probability_observed(paths) - masses[s]) <= 1e-12);
    }
  });
}
