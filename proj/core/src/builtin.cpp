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

#include "qbn/builtin.hpp"

#include <array>
#include <string>

#include "qbn/error.hpp"

namespace qbn {

namespace {

constexpr std::array<std::string_view, 3> kNames = {"gamble", "burglar",
                                                    "lung_cancer"};

NetworkDocument gamble() {
  NetworkDocument doc;
  doc.name = "gamble";
  doc.variables = {{"U", {"Play", "Not_Play"}},
                   {"G1", {"Win", "Lose"}},
                   {"G2", {"Play", "Not_Play"}}};
  doc.parents = {{"U", {}}, {"G1", {"U"}}, {"G2", {"G1"}}};
  doc.cpt["U"] = {{"", {0.5, 0.5}}};
  doc.cpt["G1"] = {{"Play", {0.5, 0.5}}, {"Not_Play", {0.5, 0.5}}};
  doc.cpt["G2"] = {{"Win", {0.68, 0.32}}, {"Lose", {0.5, 0.5}}};
  return doc;
}

// Pr(B) = 0.02, Pr(A|B) = 0.95, Pr(A|¬B) = 0.016, Pr(J|A) = 0.90,
// Pr(J|¬A) = 0.05, Pr(M|A) = 0.70, Pr(M|¬A) = 0.01.
NetworkDocument burglar() {
  NetworkDocument doc;
  doc.name = "burglar";
  doc.variables = {{"Burglar", {"t", "f"}},
                   {"Alarm", {"t", "f"}},
                   {"JohnCalls", {"t", "f"}},
                   {"MaryCalls", {"t", "f"}}};
  doc.parents = {{"Burglar", {}},
                 {"Alarm", {"Burglar"}},
                 {"JohnCalls", {"Alarm"}},
                 {"MaryCalls", {"Alarm"}}};
  doc.cpt["Burglar"] = {{"", {0.02, 0.98}}};
  doc.cpt["Alarm"] = {{"t", {0.95, 0.05}}, {"f", {0.016, 0.984}}};
  doc.cpt["JohnCalls"] = {{"t", {0.9, 0.1}}, {"f", {0.05, 0.95}}};
  doc.cpt["MaryCalls"] = {{"t", {0.7, 0.3}}, {"f", {0.01, 0.99}}};
  return doc;
}

NetworkDocument lung_cancer() {
  NetworkDocument doc;
  doc.name = "lung_cancer";
  doc.variables = {{"Smoke", {"true", "false"}},
                   {"Lung_Cancer", {"positive", "negative"}},
                   {"Cough", {"high", "low"}},
                   {"Dyspnea", {"true", "false"}}};
  doc.parents = {{"Smoke", {}},
                 {"Lung_Cancer", {"Smoke"}},
                 {"Cough", {"Lung_Cancer"}},
                 {"Dyspnea", {"Lung_Cancer"}}};
  doc.cpt["Smoke"] = {{"", {0.4, 0.6}}};
  doc.cpt["Lung_Cancer"] = {{"true", {0.3, 0.7}}, {"false", {0.1, 0.9}}};
  doc.cpt["Cough"] = {{"positive", {0.6, 0.4}}, {"negative", {0.3, 0.7}}};
  doc.cpt["Dyspnea"] = {{"positive", {0.55, 0.45}}, {"negative", {0.35, 0.65}}};
  doc.metadata = {{"cpt_status", "unverified"},
                  {"note", "placeholder CPTs; structure only"}};
  return doc;
}

}  // namespace

std::span<const std::string_view> builtin_names() { return kNames; }

NetworkDocument builtin_document(std::string_view name) {
  if (name == "gamble") return gamble();
  if (name == "burglar") return burglar();
  if (name == "lung_cancer") return lung_cancer();
  throw Error("unknown builtin network '" + std::string(name) +
              "' (expected gamble, burglar or lung_cancer)");
}

Network builtin(std::string_view name) {
  return build_network(builtin_document(name));
}

}  // namespace qbn
