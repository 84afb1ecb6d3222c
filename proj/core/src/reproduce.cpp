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

#include "qbn/reproduce.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <thread>

#include "qbn/builtin.hpp"
#include "qbn/classical.hpp"
#include "qbn/error.hpp"
#include "qbn/phase_search.hpp"
#include "qbn/quantum.hpp"

namespace qbn::reproduce {

namespace {

constexpr std::array<std::string_view, 7> kExperiments = {
    "table2",        "gamble",         "table3", "table4-collapse",
    "table4-search", "table5-permute", "uplift"};

// Columns of the burglar tables.
constexpr std::array<const char*, 4> kQueries = {"Alarm", "Burglar",
                                                 "JohnCalls", "MaryCalls"};

struct TableRow {
  std::vector<const char*> evidence;  // variables observed as "t"
  std::array<double, 4> values;       // Pr(q = t | evidence), kQueries order
};

// Reference classical burglar/alarm values, Pr(q = t | evidence).
const std::vector<TableRow>& classical_reference() {
  static const std::vector<TableRow> rows = {
      {{}, {0.0347, 0.0200, 0.0795, 0.0339}},
      {{"Alarm"}, {1.0000, 0.5479, 0.9000, 0.7000}},
      {{"Burglar"}, {0.9500, 1.0000, 0.6655, 0.8575}},
      {{"JohnCalls"}, {0.3927, 0.2158, 1.0000, 0.2810}},
      {{"MaryCalls"}, {0.7155, 0.3923, 0.6582, 1.0000}},
      {{"Alarm", "Burglar"}, {1.0000, 1.0000, 0.7000, 0.9000}},
      {{"Alarm", "JohnCalls"}, {1.0000, 0.5479, 1.0000, 0.7000}},
      {{"Alarm", "MaryCalls"}, {1.0000, 0.5479, 0.9000, 1.0000}},
      {{"Burglar", "JohnCalls"}, {0.9971, 1.0000, 1.0000, 0.6980}},
      {{"Burglar", "MaryCalls"}, {0.9992, 1.0000, 0.8994, 1.0000}},
      {{"JohnCalls", "MaryCalls"}, {0.9784, 0.5360, 1.0000, 1.0000}},
  };
  return rows;
}

// Reference quantum-like values with per-query optimized phases.
const std::vector<TableRow>& quantum_reference() {
  static const std::vector<TableRow> rows = {
      {{}, {0.1760, 0.1179, 0.1185, 0.0889}},
      {{"Alarm"}, {1.0000, 0.5479, 0.9000, 0.7000}},
      {{"Burglar"}, {0.9896, 1.0000, 0.9999, 0.9791}},
      {{"JohnCalls"}, {0.6596, 0.8380, 1.0000, 0.8138}},
      {{"MaryCalls"}, {0.9018, 0.9998, 0.9758, 1.0000}},
      {{"Alarm", "Burglar"}, {1.0000, 1.0000, 0.9000, 0.7000}},
      {{"Alarm", "JohnCalls"}, {1.0000, 0.5479, 1.0000, 0.7000}},
      {{"Alarm", "MaryCalls"}, {1.0000, 0.5479, 0.9000, 1.0000}},
      {{"Burglar", "JohnCalls"}, {0.9982, 1.0000, 1.0000, 0.7390}},
      {{"Burglar", "MaryCalls"}, {0.9993, 1.0000, 0.9138, 1.0000}},
      {{"JohnCalls", "MaryCalls"}, {0.9883, 0.6632, 1.0000, 1.0000}},
  };
  return rows;
}

// Optimized phases θ_1..θ_8 per query (no evidence).
constexpr std::array<std::array<double, 8>, 4> kOptimumThetas = {{
    {0.00, 0.20, 0.00, 0.80, 6.20, 0.50, 3.10, 4.30},  // Alarm
    {0.00, 0.00, 0.00, 0.00, 6.20, 0.10, 3.10, 3.20},  // Burglar
    {1.90, 2.30, 0.00, 2.30, 0.50, 5.50, 4.50, 2.40},  // JohnCalls
    {0.00, 0.00, 0.00, 0.00, 0.00, 3.10, 3.10, 0.00},  // MaryCalls
}};

// Rows whose JohnCalls/MaryCalls reference cells are swapped relative to the
// CPTs (and to the collapsed quantum row with the same evidence).
bool transposed_row(const TableRow& row) {
  const auto& e = row.evidence;
  return (e.size() == 1 && std::string_view(e[0]) == "Burglar") ||
         (e.size() == 2 && std::string_view(e[0]) == "Alarm" &&
          std::string_view(e[1]) == "Burglar");
}

std::string describe(const TableRow& row) {
  if (row.evidence.empty()) return "no evidence";
  std::string out;
  for (const auto* name : row.evidence) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=t";
  }
  return out;
}

Evidence evidence_of(const Network& net, const TableRow& row) {
  Evidence e;
  for (const auto* name : row.evidence) {
    const auto v = net.id(name);
    e.set(v, net.state(v, "t"));
  }
  return e;
}

Check make(std::string label, double expected, double got, double tolerance,
           Comparison cmp = Comparison::Near, std::string note = {}) {
  Check c{std::move(label), expected, got, tolerance, cmp, false, std::move(note)};
  c.pass = cmp == Comparison::Near ? std::abs(got - expected) <= tolerance
                                   : got >= expected - tolerance;
  return c;
}

std::string fmt(double v, int precision = 4) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", precision, v);
  return buf;
}

unsigned default_threads() {
  return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
}

}  // namespace

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

std::size_t Report::pass_count() const {
  return static_cast<std::size_t>(std::count_if(
      checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::span<const std::string_view> experiment_names() { return kExperiments; }

Report gamble_joint_table() {
  const auto net = builtin("gamble");
  constexpr std::array<double, 8> kExpected = {0.17, 0.08, 0.125, 0.125,
                                               0.17, 0.08, 0.125, 0.125};
  Report report{"table2", {}};
  const auto table = joint_table(net);
  for (std::size_t k = 0; k < table.size(); ++k) {
    std::string label = "Pr(";
    for (std::size_t i = 0; i < net.size(); ++i) {
      if (i > 0) label += ", ";
      const auto& var = net.variable(VarId{i});
      label += var.name + "=" + var.states[table[k].assignment.states()[i]];
    }
    label += ")";
    report.checks.push_back(make(label, kExpected.at(k), table[k].probability, 1e-12));
  }
  return report;
}

Report gamble_inference() {
  const auto net = builtin("gamble");
  const auto g2 = net.id("G2");
  const auto play = net.state(g2, "Play");
  const Evidence evidence{{net.id("U"), net.state(net.id("U"), "Play")}};
  Report report{"gamble", {}};

  const auto classical = infer_classical(net, g2, evidence);
  report.checks.push_back(make("classical Pr(G2=Play | U=Play)", 0.59,
                               classical.probabilities[play], 1e-10));
  report.checks.push_back(make("classical Pr(G2=Not_Play | U=Play)", 0.41,
                               classical.probabilities[1 - play], 1e-10));

  const double delta_fit = std::acos(-0.998853);
  const auto fitted = infer_quantum(net, g2, evidence, ThetaVector({0.0, delta_fit}));
  report.checks.push_back(make("quantum Pr(G2=Play | U=Play), cos Δθ = -0.998853",
                               0.42, fitted.distribution[play], 0.005));
  const auto at309 = infer_quantum(net, g2, evidence, ThetaVector({0.0, 3.09}));
  report.checks.push_back(make("quantum Pr(G2=Play | U=Play), θ = (0, 3.09)", 0.42,
                               at309.distribution[play], 0.005));
  report.checks.push_back(make("quantum Pr(G2=Not_Play | U=Play), θ = (0, 3.09)",
                               0.58, at309.distribution[1 - play], 0.005));
  report.checks.push_back(make("fit_theta_to_target(0.42) Δθ [rad]", 3.09,
                               fit_theta_to_target(net, g2, play, evidence, 0.42),
                               0.01));

  const auto trace = sweep_shared_phase(net, g2, evidence, kDefaultSweepStep);
  auto by_play = [&](const SweepSample& a, const SweepSample& b) {
    return a.probabilities[play] < b.probabilities[play];
  };
  const auto max_it = std::max_element(trace.samples.begin(), trace.samples.end(), by_play);
  const auto min_it = std::min_element(trace.samples.begin(), trace.samples.end(), by_play);
  report.checks.push_back(make("sweep max Pr(G2=Play), step 1e-4", 0.5915,
                               max_it->probabilities[play], 0.0005));
  report.checks.push_back(make("sweep argmax Δ [rad]", 0.0, max_it->thetas[1],
                               kDefaultSweepStep));

  // Closed form at cos Δ = -1: (m_play - c_play) / (m_total - c_total).
  const double c_play = 2.0 * std::sqrt(0.17 * 0.125);
  const double c_not = 2.0 * std::sqrt(0.08 * 0.125);
  const double closed_min = (0.295 - c_play) / (0.5 - c_play - c_not);
  report.checks.push_back(make("sweep min Pr(G2=Play), step 1e-4", closed_min,
                               min_it->probabilities[play], 0.0005,
                               Comparison::Near,
                               "closed form at full precision; 0.4118 with "
                               "4-digit rounded coefficients"));
  report.checks.push_back(make("sweep argmin Δ [rad]", std::numbers::pi,
                               min_it->thetas[1], kDefaultSweepStep));
  const auto quarter = static_cast<std::size_t>(
      std::llround(std::numbers::pi / 2.0 / kDefaultSweepStep));
  report.checks.push_back(make("sweep Pr(G2=Play) at Δ ≈ π/2", 0.59,
                               trace.samples.at(quarter).probabilities[play], 1e-4));
  return report;
}

Report burglar_classical_table() {
  const auto net = builtin("burglar");
  Report report{"table3", {}};
  for (const auto& row : classical_reference()) {
    const auto evidence = evidence_of(net, row);
    const bool swapped = transposed_row(row);
    for (std::size_t q = 0; q < kQueries.size(); ++q) {
      const auto v = net.id(kQueries[q]);
      const auto t = net.state(v, "t");
      std::string note;
      double got;
      if (evidence.contains(v)) {
        got = *evidence.get(v) == t ? 1.0 : 0.0;
        note = "observed";
      } else {
        got = infer_classical(net, v, evidence).probabilities[t];
      }
      std::size_t column = q;
      if (swapped && (q == 2 || q == 3)) {
        column = 5 - q;
        note = std::string("compared with reference ") + kQueries[column] +
               " cell (John/Mary swapped in this row)";
      }
      report.checks.push_back(make("Pr(" + std::string(kQueries[q]) + "=t | " +
                                       describe(row) + ")",
                                   row.values[column], got, 5e-4,
                                   Comparison::Near, note));
    }
  }
  return report;
}

Report burglar_collapse() {
  const auto net = builtin("burglar");
  Report report{"table4-collapse", {}};
  std::mt19937_64 rng(2014);
  std::uniform_real_distribution<double> phase(0.0, kTwoPi);
  for (const auto& row : quantum_reference()) {
    if (std::find_if(row.evidence.begin(), row.evidence.end(), [](const char* n) {
          return std::string_view(n) == "Alarm";
        }) == row.evidence.end()) {
      continue;
    }
    const auto evidence = evidence_of(net, row);
    for (std::size_t q = 0; q < kQueries.size(); ++q) {
      const auto v = net.id(kQueries[q]);
      if (evidence.contains(v)) continue;
      const auto t = net.state(v, "t");
      const double classical = infer_classical(net, v, evidence).probabilities[t];
      const QuantumQuery query(net, v, evidence);
      double worst = 0.0;
      double worst_value = classical;
      for (int trial = 0; trial < 64; ++trial) {
        std::vector<double> thetas(query.path_count());
        if (trial > 0) {
          for (auto& th : thetas) th = phase(rng);
        }
        const double p = query.probability(t, ThetaVector(thetas));
        if (std::abs(p - classical) >= worst) {
          worst = std::abs(p - classical);
          worst_value = p;
        }
      }
      const auto label = "Pr(" + std::string(kQueries[q]) + "=t | " + describe(row) + ")";
      report.checks.push_back(make(label + " quantum == classical", classical,
                                   worst_value, 1e-12, Comparison::Near,
                                   "worst of 64 phase vectors, K = " +
                                       std::to_string(query.path_count())));
      report.checks.push_back(make(label + " vs reference", row.values[q],
                                   worst_value, 5e-5, Comparison::Near,
                                   "reference at 4 d.p."));
    }
  }
  return report;
}

Report burglar_search(std::size_t restarts, std::uint64_t seed) {
  const auto net = builtin("burglar");
  Report report{"table4-search", {}};
  const auto& row = quantum_reference().front();
  SearchOptions options;
  options.step = kDefaultSearchStep;
  options.strategy = SearchStrategy::CoordinateAscent;
  options.restarts = restarts;
  options.seed = seed;
  options.threads = default_threads();
  for (std::size_t q = 0; q < kQueries.size(); ++q) {
    const auto v = net.id(kQueries[q]);
    const auto result = grid_search(net, v, net.state(v, "t"), Evidence{}, options);
    std::string thetas;
    for (double th : result.best_thetas.phases()) {
      thetas += (thetas.empty() ? "" : ",") + fmt(th, 1);
    }
    report.checks.push_back(make("max Pr(" + std::string(kQueries[q]) +
                                     "=t), no evidence",
                                 row.values[q], result.best_probability, 0.01,
                                 Comparison::AtLeast,
                                 "θ = (" + thetas + "), " +
                                     std::to_string(result.evaluations) +
                                     " evaluations, seed " + std::to_string(seed)));
  }
  return report;
}

Report burglar_theta_permutations() {
  const auto net = builtin("burglar");
  Report report{"table5-permute", {}};
  const auto& row = quantum_reference().front();
  for (std::size_t q = 0; q < kQueries.size(); ++q) {
    const auto v = net.id(kQueries[q]);
    const auto t = net.state(v, "t");
    const QuantumQuery query(net, v, Evidence{});
    const auto& listed = kOptimumThetas[q];

    std::array<std::size_t, 8> perm{};
    std::iota(perm.begin(), perm.end(), 0);
    std::array<std::size_t, 8> best_perm = perm;
    double best_residual = std::numeric_limits<double>::infinity();
    double best_value = 0.0;
    // perm[k] = which listed θ is applied to configuration k.
    do {
      std::vector<double> thetas(8);
      for (std::size_t k = 0; k < 8; ++k) thetas[k] = listed[perm[k]];
      const double p = query.probability(t, ThetaVector(thetas));
      const double residual = std::abs(p - row.values[q]);
      if (residual < best_residual) {
        best_residual = residual;
        best_value = p;
        best_perm = perm;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<double> identity(listed.begin(), listed.end());
    const double as_listed = query.probability(t, ThetaVector(identity));
    std::string mapping;
    for (auto i : best_perm) {
      mapping += (mapping.empty() ? "" : ",") + std::string("θ") + std::to_string(i + 1);
    }
    report.checks.push_back(make("Pr(" + std::string(kQueries[q]) +
                                     "=t), best θ permutation",
                                 row.values[q], best_value, 0.02,
                                 Comparison::Near,
                                 "configs 0..7 <- (" + mapping + "), residual " +
                                     fmt(best_residual, 6) + "; as listed " +
                                     fmt(as_listed)));
  }
  return report;
}

Report burglar_uplift() {
  Report report{"uplift", {}};
  const auto& classical = classical_reference().front().values;
  const auto& quantum = quantum_reference().front().values;
  double sum = 0.0;
  std::string parts;
  for (std::size_t q = 0; q < kQueries.size(); ++q) {
    const double increase = 100.0 * (quantum[q] - classical[q]) / classical[q];
    sum += increase;
    parts += (parts.empty() ? "" : ", ") + std::string(kQueries[q]) + " " + fmt(increase, 1) + "%";
  }
  report.checks.push_back(make("mean relative increase, no evidence [%]", 270.625,
                               sum / kQueries.size(), 10.0, Comparison::Near, parts));
  return report;
}

Report run(std::string_view what) {
  if (what == "table2") return gamble_joint_table();
  if (what == "gamble") return gamble_inference();
  if (what == "table3") return burglar_classical_table();
  if (what == "table4-collapse") return burglar_collapse();
  if (what == "table4-search") return burglar_search();
  if (what == "table5-permute") return burglar_theta_permutations();
  if (what == "uplift") return burglar_uplift();
  throw Error("unknown experiment '" + std::string(what) + "'");
}

}  // namespace qbn::reproduce
