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

#ifndef QBN_REPRODUCE_HPP
#define QBN_REPRODUCE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qbn::reproduce {

enum class Comparison {
  /// |got − expected| <= tolerance
  Near,
  /// got >= expected − tolerance
  AtLeast,
};

struct Check {
  std::string label;
  double expected = 0.0;
  double got = 0.0;
  double tolerance = 0.0;
  Comparison comparison = Comparison::Near;
  bool pass = false;
  std::string note;
};

struct Report {
  std::string what;
  std::vector<Check> checks;

  bool all_pass() const;
  std::size_t pass_count() const;
};

/// "table2", "gamble", "table3", "table4-collapse", "table4-search",
/// "table5-permute", "uplift".
std::span<const std::string_view> experiment_names();

/// Runs one experiment. Throws Error for unknown names.
Report run(std::string_view what);

// Individual experiments, also used by the acceptance suite.
Report gamble_joint_table();
Report gamble_inference();
Report burglar_classical_table();
Report burglar_collapse();
Report burglar_search(std::size_t restarts = 100, std::uint64_t seed = 0);
Report burglar_theta_permutations();
Report burglar_uplift();

}  // namespace qbn::reproduce

#endif  // QBN_REPRODUCE_HPP
