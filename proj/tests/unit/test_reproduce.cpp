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

#include <string>

#include "qbn/error.hpp"
#include "qbn/reproduce.hpp"

using namespace qbn;

namespace {

void check_report(const reproduce::Report& report) {
  CHECK(!report.checks.empty());
  for (const auto& c : report.checks) {
    INFO(report.what << " / " << c.label << ": expected " << c.expected << ", got "
                     << c.got << " (tol " << c.tolerance << ")");
    CHECK(c.pass);
  }
  CHECK(report.pass_count() == report.checks.size());
  CHECK(report.all_pass());
}

}  // namespace

TEST_CASE("every experiment reproduces") {
  for (auto name : reproduce::experiment_names()) {
    SUBCASE(std::string(name).c_str()) {
      const auto report = reproduce::run(name);
      CHECK(report.what == name);
      check_report(report);
    }
  }
}

TEST_CASE("experiment sizes") {
  CHECK(reproduce::gamble_joint_table().checks.size() == 8);
  CHECK(reproduce::burglar_classical_table().checks.size() == 44);
}

TEST_CASE("unknown experiment") {
  CHECK_THROWS_AS(reproduce::run("table9"), Error);
}

TEST_CASE("a failing comparison is reported") {
  reproduce::Report r{"x", {{"a", 1.0, 1.0, 0.0, reproduce::Comparison::Near, true, ""},
                            {"b", 1.0, 0.5, 0.1, reproduce::Comparison::AtLeast, false, ""}}};
  CHECK(r.pass_count() == 1);
  CHECK_FALSE(r.all_pass());
}
