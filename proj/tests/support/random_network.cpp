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

#include "random_network.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace qbn::testing {

NetworkDocument random_binary_document(std::mt19937_64& rng,
                                       const RandomNetworkOptions& options) {
  std::uniform_int_distribution<std::size_t> size_dist(options.min_variables,
                                                       options.max_variables);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t n = size_dist(rng);

  // Variable r has rank r; edges only go from lower to higher rank.
  std::vector<std::vector<std::size_t>> parents(n);
  for (std::size_t child = 0; child < n; ++child) {
    for (std::size_t parent = 0; parent < child; ++parent) {
      if (unit(rng) < options.edge_probability) parents[child].push_back(parent);
    }
    std::shuffle(parents[child].begin(), parents[child].end(), rng);
  }
  std::vector<std::size_t> declaration(n);
  std::iota(declaration.begin(), declaration.end(), 0);
  std::shuffle(declaration.begin(), declaration.end(), rng);

  auto name = [](std::size_t r) { return "X" + std::to_string(r); };
  NetworkDocument doc;
  doc.name = "random";
  for (auto r : declaration) doc.variables.push_back({name(r), {"s0", "s1"}});
  for (std::size_t child = 0; child < n; ++child) {
    auto& list = doc.parents[name(child)];
    for (auto p : parents[child]) list.push_back(name(p));
    auto& rows = doc.cpt[name(child)];
    const std::size_t row_count = std::size_t{1} << parents[child].size();
    for (std::size_t row = 0; row < row_count; ++row) {
      std::string key;
      for (std::size_t i = 0; i < parents[child].size(); ++i) {
        if (i > 0) key += '|';
        // First parent is the most significant bit.
        const auto bit = (row >> (parents[child].size() - 1 - i)) & 1u;
        key += bit ? "s1" : "s0";
      }
      double p = unit(rng);
      if (unit(rng) < options.deterministic_row_probability) p = unit(rng) < 0.5 ? 0.0 : 1.0;
      rows[key] = {p, 1.0 - p};
    }
  }
  return doc;
}

Network random_binary_network(std::mt19937_64& rng,
                              const RandomNetworkOptions& options) {
  return build_network(random_binary_document(rng, options));
}

RandomQuery random_query(std::mt19937_64& rng, const Network& net,
                         double observe_probability) {
  std::uniform_int_distribution<std::size_t> pick(0, net.size() - 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  RandomQuery q{VarId{pick(rng)}, {}};
  for (std::size_t i = 0; i < net.size(); ++i) {
    const VarId v{i};
    if (v == q.query || unit(rng) >= observe_probability) continue;
    std::uniform_int_distribution<std::size_t> state(0, net.cardinality(v) - 1);
    q.evidence.set(v, state(rng));
  }
  return q;
}

ThetaVector random_thetas(std::mt19937_64& rng, std::size_t k) {
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  std::vector<double> thetas(k);
  for (auto& t : thetas) t = phase(rng);
  return ThetaVector(std::move(thetas));
}

}  // namespace qbn::testing
