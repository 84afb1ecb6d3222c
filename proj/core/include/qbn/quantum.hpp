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

#ifndef QBN_QUANTUM_HPP
#define QBN_QUANTUM_HPP

#include <compare>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "qbn/classical.hpp"
#include "qbn/network.hpp"

namespace qbn {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Maps any real phase into [0, 2π).
double wrap_phase(double theta);

/// One phase per unobserved configuration, shared by every query state.
/// Values are wrapped into [0, 2π) on construction.
class ThetaVector {
 public:
  ThetaVector() = default;
  explicit ThetaVector(std::vector<double> phases);
  static ThetaVector zeros(std::size_t size);

  std::size_t size() const noexcept { return phases_.size(); }
  double operator[](std::size_t i) const { return phases_.at(i); }
  std::span<const double> phases() const noexcept { return phases_; }

  /// Adds `offset` to every phase.
  ThetaVector shifted(double offset) const;

  friend bool operator==(const ThetaVector&, const ThetaVector&) = default;
  friend auto operator<=>(const ThetaVector&, const ThetaVector&) = default;

 private:
  std::vector<double> phases_;
};

/// One unobserved joint configuration consistent with the query state and
/// the evidence. `config` is aligned with unobserved_variables().
struct PathAmplitude {
  std::vector<StateIndex> config;
  double probability = 0.0;
  double magnitude = 0.0;
};

/// Born rule: √p. Throws InferenceError outside [0, 1].
double amplitude_from_probability(double p);

/// Variables neither queried nor observed, in canonical order.
std::vector<VarId> unobserved_variables(const Network& net, VarId query,
                                        const Evidence& evidence);

/// K: number of unobserved configurations (length of the ThetaVector).
std::size_t path_count(const Network& net, VarId query,
                       const Evidence& evidence);

/// Paths in canonical unobserved-configuration order.
std::vector<PathAmplitude> enumerate_paths(
    const Network& net, VarId query, StateIndex query_state,
    const Evidence& evidence, std::uint64_t cap = kDefaultConfigurationCap);

/// Diagonal of the joint-state density matrix, canonical order.
std::vector<double> density_diagonal(
    const Network& net, std::uint64_t cap = kDefaultConfigurationCap);

/// Marginal by summing density-diagonal entries selected by query state and
/// evidence, then normalizing.
Distribution marginal_partial_trace(
    const Network& net, VarId query, const Evidence& evidence,
    std::uint64_t cap = kDefaultConfigurationCap);

/// 2 Σ_{i<j} √(p_i p_j) cos(θ_i − θ_j).
double interference_term(std::span<const PathAmplitude> paths,
                         const ThetaVector& thetas);

/// |Σ_i √p_i e^{iθ_i}|², the coherent form of Σ p_i + interference.
double coherent_path_mass(std::span<const PathAmplitude> paths,
                          const ThetaVector& thetas);

/// Classical Markov single-path probability: product of the chain entries.
double path_probability_single(std::span<const double> chain);

/// Σ p_i: paths summed with no cross terms, as when the path is observed.
double multipath_probability_observed(std::span<const PathAmplitude> paths);

struct QuantumStateTerms {
  double classical_mass = 0.0;
  double interference = 0.0;
  /// classical_mass + interference, floored at zero (cancellation can leave
  /// a residue of a few ulps below zero).
  double unnormalized = 0.0;
};

struct QuantumInferenceResult {
  VarId query;
  std::vector<QuantumStateTerms> states;
  double alpha = 0.0;
  std::vector<double> distribution;
};

/// Paths for every state of one query, prepared once and evaluated for many
/// phase vectors. Search code evaluates through this type so that a result
/// re-evaluated with infer_quantum() is bit-identical.
class QuantumQuery {
 public:
  QuantumQuery(const Network& net, VarId query, const Evidence& evidence,
               std::uint64_t cap = kDefaultConfigurationCap);

  VarId query() const noexcept { return query_; }
  std::size_t state_count() const noexcept { return paths_.size(); }
  std::size_t path_count() const noexcept { return path_count_; }
  std::span<const PathAmplitude> paths(StateIndex state) const {
    return paths_.at(state);
  }
  std::span<const VarId> unobserved() const noexcept { return unobserved_; }

  /// Throws InferenceError on a length mismatch and ZeroMassError when every
  /// state's unnormalized value is zero.
  QuantumInferenceResult evaluate(const ThetaVector& thetas) const;

  /// evaluate(thetas).distribution[state]
  double probability(StateIndex state, const ThetaVector& thetas) const;

 private:
  VarId query_;
  std::size_t path_count_ = 0;
  std::vector<VarId> unobserved_;
  std::vector<std::vector<PathAmplitude>> paths_;
};

QuantumInferenceResult infer_quantum(
    const Network& net, VarId query, const Evidence& evidence,
    const ThetaVector& thetas, std::uint64_t cap = kDefaultConfigurationCap);

}  // namespace qbn

#endif  // QBN_QUANTUM_HPP
