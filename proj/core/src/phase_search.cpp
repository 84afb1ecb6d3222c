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

#include "qbn/phase_search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <numbers>
#include <random>
#include <string>
#include <thread>

#include "qbn/error.hpp"

namespace qbn {

namespace {

constexpr std::size_t kMaxGridPoints = std::size_t{1} << 27;

struct Candidate {
  double value = -1.0;
  ThetaVector thetas;
  std::uint64_t evaluations = 0;
};

// Higher objective wins; equal objectives go to the smaller θ vector.
bool better(double value, const ThetaVector& thetas, const Candidate& best) {
  if (value > best.value) return true;
  return value == best.value && thetas < best.thetas;
}

void absorb(Candidate& best, const Candidate& other) {
  if (better(other.value, other.thetas, best)) {
    best.value = other.value;
    best.thetas = other.thetas;
  }
  best.evaluations += other.evaluations;
}

unsigned worker_count(unsigned requested, std::size_t work_items) {
  unsigned n = std::max(1u, requested);
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(work_items, 1)));
}

// Runs body(begin, end, slot) over [0, items) split into contiguous chunks.
template <typename Body>
void run_chunked(std::size_t items, unsigned threads, Body&& body) {
  const unsigned n = worker_count(threads, items);
  if (n == 1) {
    body(std::size_t{0}, items, 0u);
    return;
  }
  std::vector<std::exception_ptr> errors(n);
  {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (items + n - 1) / n;
    for (unsigned w = 0; w < n; ++w) {
      const std::size_t begin = std::min(items, w * chunk);
      const std::size_t end = std::min(items, begin + chunk);
      workers.emplace_back([&body, &errors, begin, end, w] {
        try {
          body(begin, end, w);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

StateIndex checked_state(const QuantumQuery& q, StateIndex target) {
  if (target >= q.state_count()) throw SearchError("target state out of range");
  return target;
}

Candidate exhaustive(const QuantumQuery& q, StateIndex target,
                     const std::vector<double>& grid, unsigned threads) {
  const std::size_t free = q.path_count() - 1;
  if (free > kMaxExhaustiveFreePhases) {
    throw SearchError(
        "exhaustive search supports at most " +
        std::to_string(kMaxExhaustiveFreePhases) +
        " free phases (θ_1 is pinned to 0), i.e. K <= " +
        std::to_string(kMaxExhaustiveFreePhases + 1) + "; this query has K = " +
        std::to_string(q.path_count()) + ". Use coordinate-ascent.");
  }
  std::uint64_t cells = 1;
  for (std::size_t i = 0; i < free; ++i) {
    if (cells > kMaxExhaustiveCells / grid.size()) {
      throw SearchError("exhaustive grid exceeds " +
                        std::to_string(kMaxExhaustiveCells) +
                        " cells; use a coarser step");
    }
    cells *= grid.size();
  }

  std::vector<Candidate> partial(worker_count(threads, cells));
  run_chunked(cells, threads, [&](std::size_t begin, std::size_t end, unsigned slot) {
    Candidate local;
    std::vector<double> thetas(q.path_count(), 0.0);
    for (std::size_t cell = begin; cell < end; ++cell) {
      // First free phase is the most significant digit.
      auto rest = cell;
      for (std::size_t i = free; i >= 1; --i) {
        thetas[i] = grid[rest % grid.size()];
        rest /= grid.size();
      }
      ThetaVector tv(thetas);
      const double v = q.probability(target, tv);
      ++local.evaluations;
      if (better(v, tv, local)) {
        local.value = v;
        local.thetas = std::move(tv);
      }
    }
    partial[slot] = std::move(local);
  });

  Candidate best;
  for (const auto& p : partial) absorb(best, p);
  return best;
}

Candidate fix_and_vary(const QuantumQuery& q, StateIndex target,
                       const std::vector<double>& grid,
                       const SearchOptions& options) {
  const auto [first, second] = options.pair;
  if (!options.fixed || options.fixed->size() != q.path_count()) {
    throw SearchError("fix-and-vary-2 needs a fixed θ vector of length " +
                      std::to_string(q.path_count()));
  }
  if (first == second || first >= q.path_count() || second >= q.path_count()) {
    throw SearchError("fix-and-vary-2 needs two distinct θ indices below " +
                      std::to_string(q.path_count()));
  }
  const std::size_t cells = grid.size() * grid.size();
  std::vector<Candidate> partial(worker_count(options.threads, cells));
  run_chunked(cells, options.threads, [&](std::size_t begin, std::size_t end, unsigned slot) {
    Candidate local;
    std::vector<double> thetas(options.fixed->phases().begin(),
                               options.fixed->phases().end());
    for (std::size_t cell = begin; cell < end; ++cell) {
      thetas[first] = grid[cell / grid.size()];
      thetas[second] = grid[cell % grid.size()];
      ThetaVector tv(thetas);
      const double v = q.probability(target, tv);
      ++local.evaluations;
      if (better(v, tv, local)) {
        local.value = v;
        local.thetas = std::move(tv);
      }
    }
    partial[slot] = std::move(local);
  });
  Candidate best;
  for (const auto& p : partial) absorb(best, p);
  return best;
}

Candidate coordinate_ascent(const QuantumQuery& q, StateIndex target,
                            const std::vector<double>& grid,
                            const SearchOptions& options) {
  if (options.restarts == 0) throw SearchError("restarts must be at least 1");
  const std::size_t k = q.path_count();

  // Starting points are drawn up front so they do not depend on threading.
  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<double>> starts(options.restarts,
                                          std::vector<double>(k, 0.0));
  for (auto& start : starts) {
    for (std::size_t i = 1; i < k; ++i) start[i] = grid[rng() % grid.size()];
  }

  std::vector<Candidate> per_restart(options.restarts);
  run_chunked(options.restarts, options.threads,
              [&](std::size_t begin, std::size_t end, unsigned) {
    for (std::size_t r = begin; r < end; ++r) {
      auto thetas = starts[r];
      Candidate c;
      double current = q.probability(target, ThetaVector(thetas));
      c.evaluations = 1;
      for (std::size_t pass = 0; pass < options.max_passes; ++pass) {
        bool improved = false;
        for (std::size_t i = 1; i < k; ++i) {
          const double original = thetas[i];
          double best_value = current;
          double best_phase = original;
          for (double g : grid) {
            if (g == original) continue;
            thetas[i] = g;
            const double v = q.probability(target, ThetaVector(thetas));
            ++c.evaluations;
            if (v > best_value) {
              best_value = v;
              best_phase = g;
            }
          }
          thetas[i] = best_phase;
          if (best_phase != original) {
            current = best_value;
            improved = true;
            if (options.on_accept) options.on_accept(r, current);
          }
        }
        if (!improved) break;
      }
      c.value = current;
      c.thetas = ThetaVector(thetas);
      per_restart[r] = std::move(c);
    }
  });

  Candidate best;
  for (const auto& c : per_restart) absorb(best, c);
  return best;
}

}  // namespace

std::vector<double> phase_grid(double step) {
  if (!std::isfinite(step) || !(step > 0.0)) {
    throw SearchError("step must be a positive finite number of radians");
  }
  const double span = std::floor(kTwoPi / step + 1e-9);
  if (span + 1.0 > static_cast<double>(kMaxGridPoints)) {
    throw SearchError("step " + std::to_string(step) +
                      " gives more than " + std::to_string(kMaxGridPoints) +
                      " grid points");
  }
  const auto n = static_cast<std::size_t>(span) + 1;
  std::vector<double> grid(n);
  for (std::size_t k = 0; k < n; ++k) grid[k] = static_cast<double>(k) * step;
  return grid;
}

SweepTrace sweep_shared_phase(const Network& net, VarId query,
                              const Evidence& evidence, double step) {
  const auto grid = phase_grid(step);
  const QuantumQuery q(net, query, evidence);
  const std::size_t k = q.path_count();

  SweepTrace trace;
  trace.query = query;
  trace.path_count = k;
  SweepAxis axis{{}, 0.0, step, grid.size()};
  for (std::size_t i = 1; i < k; ++i) axis.theta_indices.push_back(i);
  trace.axes.push_back(std::move(axis));
  trace.samples.reserve(grid.size());
  for (double delta : grid) {
    std::vector<double> thetas(k, delta);
    thetas[0] = 0.0;
    auto probabilities = q.evaluate(ThetaVector(thetas)).distribution;
    trace.samples.push_back({std::move(thetas), std::move(probabilities)});
  }
  return trace;
}

SweepTrace sweep_pair(const Network& net, VarId query, const Evidence& evidence,
                      const ThetaVector& fixed, std::size_t first,
                      std::size_t second, double step, double origin) {
  const auto grid = phase_grid(step);
  if (!std::isfinite(origin)) throw SearchError("origin must be finite");
  const QuantumQuery q(net, query, evidence);
  const std::size_t k = q.path_count();
  if (fixed.size() != k) {
    throw SearchError("fixed θ vector has " + std::to_string(fixed.size()) +
                      " entries, query needs " + std::to_string(k));
  }
  if (first >= k || second >= k) {
    throw SearchError("θ index out of range (query has " + std::to_string(k) +
                      " phases)");
  }
  if (first == second) throw SearchError("the two varied θ indices must differ");

  SweepTrace trace;
  trace.query = query;
  trace.path_count = k;
  trace.axes.push_back({{first}, origin, step, grid.size()});
  trace.axes.push_back({{second}, origin, step, grid.size()});
  trace.samples.reserve(grid.size() * grid.size());
  std::vector<double> thetas(fixed.phases().begin(), fixed.phases().end());
  for (double a : grid) {
    for (double b : grid) {
      thetas[first] = origin + a;
      thetas[second] = origin + b;
      trace.samples.push_back({thetas, q.evaluate(ThetaVector(thetas)).distribution});
    }
  }
  return trace;
}

std::string_view to_string(SearchStrategy s) {
  switch (s) {
    case SearchStrategy::Exhaustive: return "exhaustive";
    case SearchStrategy::FixAndVaryPair: return "fix-and-vary-2";
    case SearchStrategy::CoordinateAscent: return "coordinate-ascent";
  }
  return "unknown";
}

std::optional<SearchStrategy> parse_strategy(std::string_view text) {
  for (auto s : {SearchStrategy::Exhaustive, SearchStrategy::FixAndVaryPair,
                 SearchStrategy::CoordinateAscent}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

SearchResult grid_search(const Network& net, VarId query,
                         StateIndex target_state, const Evidence& evidence,
                         const SearchOptions& options) {
  const auto grid = phase_grid(options.step);
  const QuantumQuery q(net, query, evidence);
  checked_state(q, target_state);

  SearchResult result;
  result.strategy = options.strategy;
  result.step = options.step;
  result.seed = options.seed;
  result.restarts =
      options.strategy == SearchStrategy::CoordinateAscent ? options.restarts : 0;

  if (q.path_count() == 1) {
    result.best_thetas = ThetaVector::zeros(1);
    result.best_probability = q.probability(target_state, result.best_thetas);
    result.evaluations = 1;
    return result;
  }

  Candidate best;
  switch (options.strategy) {
    case SearchStrategy::Exhaustive:
      best = exhaustive(q, target_state, grid, options.threads);
      break;
    case SearchStrategy::FixAndVaryPair:
      best = fix_and_vary(q, target_state, grid, options);
      break;
    case SearchStrategy::CoordinateAscent:
      best = coordinate_ascent(q, target_state, grid, options);
      break;
  }
  result.best_probability = best.value;
  result.best_thetas = std::move(best.thetas);
  result.evaluations = best.evaluations;
  return result;
}

namespace {

QuantumQuery two_path_query(const Network& net, VarId query,
                            StateIndex target_state, const Evidence& evidence) {
  QuantumQuery q(net, query, evidence);
  if (q.path_count() != 2) {
    throw SearchError("phase fitting needs exactly 2 paths, query has " +
                      std::to_string(q.path_count()));
  }
  checked_state(q, target_state);
  return q;
}

double at_delta(const QuantumQuery& q, StateIndex target, double delta) {
  return q.probability(target, ThetaVector({0.0, delta}));
}

}  // namespace

std::pair<double, double> attainable_range(const Network& net, VarId query,
                                           StateIndex target_state,
                                           const Evidence& evidence) {
  const auto q = two_path_query(net, query, target_state, evidence);
  // Pr is a ratio of affine functions of cos Δ, hence monotone on [0, π].
  const double a = at_delta(q, target_state, 0.0);
  const double b = at_delta(q, target_state, std::numbers::pi);
  return {std::min(a, b), std::max(a, b)};
}

double fit_theta_to_target(const Network& net, VarId query,
                           StateIndex target_state, const Evidence& evidence,
                           double target) {
  const auto q = two_path_query(net, query, target_state, evidence);
  double lo = 0.0;
  double hi = std::numbers::pi;
  const double f_lo = at_delta(q, target_state, lo);
  const double f_hi = at_delta(q, target_state, hi);
  const double low = std::min(f_lo, f_hi);
  const double high = std::max(f_lo, f_hi);
  if (!(target >= low && target <= high)) throw RangeError(target, low, high);
  if (target == f_lo) return lo;
  if (target == f_hi) return hi;

  const bool lo_above = f_lo > target;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    const double f = at_delta(q, target_state, mid);
    if (f == target) return mid;
    if ((f > target) == lo_above) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace qbn
