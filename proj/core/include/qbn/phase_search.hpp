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

#ifndef QBN_PHASE_SEARCH_HPP
#define QBN_PHASE_SEARCH_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "qbn/network.hpp"
#include "qbn/quantum.hpp"

namespace qbn {

inline constexpr double kDefaultSearchStep = 0.1;
inline constexpr double kDefaultSweepStep = 0.0001;

/// Grid values k·step for k = 0 .. floor(2π / step). Includes 0, never
/// exceeds 2π. Throws SearchError for step <= 0 or a non-finite step.
std::vector<double> phase_grid(double step);

struct SweepAxis {
  /// θ indices that take this axis value (several for the shared sweep).
  std::vector<std::size_t> theta_indices;
  double origin = 0.0;
  double step = 0.0;
  std::size_t count = 0;
};

struct SweepSample {
  /// Full θ vector as swept (not wrapped).
  std::vector<double> thetas;
  /// Normalized probability of each query state.
  std::vector<double> probabilities;
};

struct SweepTrace {
  VarId query;
  std::size_t path_count = 0;
  std::vector<SweepAxis> axes;
  /// Row-major over axes, first axis slowest.
  std::vector<SweepSample> samples;
};

/// θ = (0, Δ, …, Δ) for Δ on phase_grid(step). For K = 2 this is the
/// single-angle sweep of the two-path case.
SweepTrace sweep_shared_phase(const Network& net, VarId query,
                              const Evidence& evidence, double step);

/// Varies θ_first and θ_second over origin + phase_grid(step), the other
/// phases taken from `fixed`. Indices are zero-based.
SweepTrace sweep_pair(const Network& net, VarId query,
                      const Evidence& evidence, const ThetaVector& fixed,
                      std::size_t first, std::size_t second, double step,
                      double origin = 0.0);

enum class SearchStrategy { Exhaustive, FixAndVaryPair, CoordinateAscent };

std::string_view to_string(SearchStrategy s);
std::optional<SearchStrategy> parse_strategy(std::string_view text);

/// Exhaustive search pins θ_1 = 0 and refuses more free phases than this.
inline constexpr std::size_t kMaxExhaustiveFreePhases = 3;
inline constexpr std::uint64_t kMaxExhaustiveCells = std::uint64_t{1} << 32;

struct SearchOptions {
  double step = kDefaultSearchStep;
  SearchStrategy strategy = SearchStrategy::CoordinateAscent;
  std::size_t restarts = 100;
  std::uint64_t seed = 0;
  /// Worker threads for grid cells / restarts. Results do not depend on it.
  unsigned threads = 1;
  /// Upper bound on coordinate sweeps per restart.
  std::size_t max_passes = 200;
  /// FixAndVaryPair: base vector and the two varied indices.
  std::optional<ThetaVector> fixed;
  std::pair<std::size_t, std::size_t> pair{0, 1};
  /// CoordinateAscent: called after every accepted coordinate update with
  /// (restart, objective). Invoked from worker threads when threads > 1.
  std::function<void(std::size_t, double)> on_accept;
};

struct SearchResult {
  double best_probability = 0.0;
  ThetaVector best_thetas;
  std::uint64_t evaluations = 0;
  SearchStrategy strategy = SearchStrategy::CoordinateAscent;
  double step = 0.0;
  std::size_t restarts = 0;
  std::uint64_t seed = 0;
};

/// Maximizes the normalized probability of `target_state` over θ. Ties go to
/// the lexicographically smallest θ vector. Deterministic given the options.
SearchResult grid_search(const Network& net, VarId query,
                         StateIndex target_state, const Evidence& evidence,
                         const SearchOptions& options);

/// Range [low, high] of Pr(target_state) over θ = (0, Δ) for K = 2.
std::pair<double, double> attainable_range(const Network& net, VarId query,
                                           StateIndex target_state,
                                           const Evidence& evidence);

/// Δ ∈ [0, π] with Pr(target_state | θ = (0, Δ)) = target, by bisection on
/// the monotone branch. Requires K = 2; throws RangeError when the target is
/// not attainable.
double fit_theta_to_target(const Network& net, VarId query,
                           StateIndex target_state, const Evidence& evidence,
                           double target);

}  // namespace qbn

#endif  // QBN_PHASE_SEARCH_HPP
