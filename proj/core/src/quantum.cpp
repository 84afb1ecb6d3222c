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

#include "qbn/quantum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "enumerate.hpp"
#include "qbn/error.hpp"

namespace qbn {

double wrap_phase(double theta) {
  double r = std::fmod(theta, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

ThetaVector::ThetaVector(std::vector<double> phases)
    : phases_(std::move(phases)) {
  for (auto& p : phases_) {
    if (!std::isfinite(p)) throw InferenceError("phase is not finite");
    p = wrap_phase(p);
  }
}

ThetaVector ThetaVector::zeros(std::size_t size) {
  return ThetaVector(std::vector<double>(size, 0.0));
}

ThetaVector ThetaVector::shifted(double offset) const {
  std::vector<double> out(phases_);
  for (auto& p : out) p += offset;
  return ThetaVector(std::move(out));
}

double amplitude_from_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InferenceError("probability " + std::to_string(p) +
                         " is outside [0, 1]");
  }
  return std::sqrt(p);
}

std::vector<VarId> unobserved_variables(const Network& net, VarId query,
                                        const Evidence& evidence) {
  std::vector<VarId> out;
  for (std::size_t i = 0; i < net.size(); ++i) {
    const VarId v{i};
    if (v != query && !evidence.contains(v)) out.push_back(v);
  }
  return out;
}

std::size_t path_count(const Network& net, VarId query,
                       const Evidence& evidence) {
  check_query(net, query, evidence);
  const auto vars = unobserved_variables(net, query, evidence);
  return static_cast<std::size_t>(detail::product_of_cardinalities(net, vars));
}

std::vector<PathAmplitude> enumerate_paths(const Network& net, VarId query,
                                           StateIndex query_state,
                                           const Evidence& evidence,
                                           std::uint64_t cap) {
  check_query(net, query, evidence);
  if (query_state >= net.cardinality(query)) {
    throw InferenceError("query state out of range for '" +
                         net.variable(query).name + "'");
  }
  const auto unobserved = unobserved_variables(net, query, evidence);
  detail::check_cap(detail::product_of_cardinalities(net, unobserved), cap);

  std::vector<StateIndex> states(net.size(), 0);
  for (const auto& [v, s] : evidence) states[v.index] = s;
  states[query.index] = query_state;

  std::vector<PathAmplitude> paths;
  detail::for_each_completion(
      net, unobserved, states,
      [&](std::span<const StateIndex> s, std::span<const StateIndex> digits) {
        const double p = detail::joint_unchecked(net, s);
        paths.push_back({{digits.begin(), digits.end()}, p, std::sqrt(p)});
      });
  return paths;
}

std::vector<double> density_diagonal(const Network& net, std::uint64_t cap) {
  detail::check_cap(net.configuration_count(), cap);
  std::vector<VarId> all;
  for (std::size_t i = 0; i < net.size(); ++i) all.push_back(VarId{i});

  // Coefficient of each basis state of the joint superposition is the
  // product of per-node amplitudes √Pr(x_i | parents); ρ_kk = |c_k|².
  std::vector<double> diagonal;
  diagonal.reserve(net.configuration_count());
  std::vector<StateIndex> states(net.size(), 0);
  detail::for_each_completion(
      net, all, states, [&](std::span<const StateIndex> s, auto) {
        double coefficient = 1.0;
        for (std::size_t i = 0; i < net.size(); ++i) {
          coefficient *= std::sqrt(net.cpt(VarId{i}).probability_in(s));
        }
        diagonal.push_back(coefficient * coefficient);
      });
  return diagonal;
}

Distribution marginal_partial_trace(const Network& net, VarId query,
                                    const Evidence& evidence,
                                    std::uint64_t cap) {
  check_query(net, query, evidence);
  const auto diagonal = density_diagonal(net, cap);

  Distribution d{query, std::vector<double>(net.cardinality(query), 0.0)};
  for (std::uint64_t k = 0; k < diagonal.size(); ++k) {
    const auto a = assignment_at(net, k);
    bool consistent = true;
    for (const auto& [v, s] : evidence) {
      if (a[v] != s) {
        consistent = false;
        break;
      }
    }
    if (consistent) d.probabilities[a[query]] += diagonal[k];
  }
  double total = 0.0;
  for (double p : d.probabilities) total += p;
  if (!(total > 0.0)) {
    throw ZeroMassError("evidence has probability zero");
  }
  for (auto& p : d.probabilities) p /= total;
  return d;
}

namespace {

void check_lengths(std::span<const PathAmplitude> paths,
                   const ThetaVector& thetas) {
  if (paths.size() != thetas.size()) {
    throw InferenceError("expected " + std::to_string(paths.size()) +
                         " phases, got " + std::to_string(thetas.size()));
  }
}

}  // namespace

double interference_term(std::span<const PathAmplitude> paths,
                         const ThetaVector& thetas) {
  check_lengths(paths, thetas);
  double sum = 0.0;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    for (std::size_t j = i + 1; j < paths.size(); ++j) {
      sum += paths[i].magnitude * paths[j].magnitude *
             std::cos(thetas[i] - thetas[j]);
    }
  }
  return 2.0 * sum;
}

double coherent_path_mass(std::span<const PathAmplitude> paths,
                          const ThetaVector& thetas) {
  check_lengths(paths, thetas);
  std::complex<double> amplitude{0.0, 0.0};
  for (std::size_t i = 0; i < paths.size(); ++i) {
    amplitude += std::polar(paths[i].magnitude, thetas[i]);
  }
  return std::norm(amplitude);
}

double path_probability_single(std::span<const double> chain) {
  double p = 1.0;
  for (double step : chain) p *= step;
  return p;
}

double multipath_probability_observed(std::span<const PathAmplitude> paths) {
  double p = 0.0;
  for (const auto& path : paths) p += path.probability;
  return p;
}

QuantumQuery::QuantumQuery(const Network& net, VarId query,
                           const Evidence& evidence, std::uint64_t cap)
    : query_(query) {
  check_query(net, query, evidence);
  unobserved_ = unobserved_variables(net, query, evidence);
  const auto card = net.cardinality(query);
  const auto per_state = detail::product_of_cardinalities(net, unobserved_);
  detail::check_cap(per_state > cap / card ? cap + 1 : per_state * card, cap);
  path_count_ = static_cast<std::size_t>(per_state);
  paths_.reserve(card);
  for (StateIndex x = 0; x < card; ++x) {
    paths_.push_back(enumerate_paths(net, query, x, evidence, cap));
  }
}

QuantumInferenceResult QuantumQuery::evaluate(const ThetaVector& thetas) const {
  if (thetas.size() != path_count_) {
    throw InferenceError("expected " + std::to_string(path_count_) +
                         " phases (one per unobserved configuration), got " +
                         std::to_string(thetas.size()));
  }
  QuantumInferenceResult result;
  result.query = query_;
  result.states.reserve(paths_.size());
  double total = 0.0;
  for (const auto& paths : paths_) {
    QuantumStateTerms terms;
    terms.classical_mass = multipath_probability_observed(paths);
    terms.interference = interference_term(paths, thetas);
    terms.unnormalized = std::max(0.0, terms.classical_mass + terms.interference);
    total += terms.unnormalized;
    result.states.push_back(terms);
  }
  if (!(total > 0.0)) {
    throw ZeroMassError(
        "interference-weighted mass is zero for every query state; "
        "normalization is undefined");
  }
  result.alpha = 1.0 / total;
  result.distribution.reserve(paths_.size());
  for (const auto& terms : result.states) {
    result.distribution.push_back(result.alpha * terms.unnormalized);
  }
  return result;
}

double QuantumQuery::probability(StateIndex state,
                                 const ThetaVector& thetas) const {
  return evaluate(thetas).distribution.at(state);
}

QuantumInferenceResult infer_quantum(const Network& net, VarId query,
                                     const Evidence& evidence,
                                     const ThetaVector& thetas,
                                     std::uint64_t cap) {
  return QuantumQuery(net, query, evidence, cap).evaluate(thetas);
}

}  // namespace qbn
