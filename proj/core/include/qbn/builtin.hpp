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

#ifndef QBN_BUILTIN_HPP
#define QBN_BUILTIN_HPP

#include <span>
#include <string_view>

#include "qbn/network.hpp"
#include "qbn/network_io.hpp"

namespace qbn {

/// Names accepted by builtin(): "gamble", "burglar", "lung_cancer".
std::span<const std::string_view> builtin_names();

/// Two-stage gamble U -> G1 -> G2.
///
/// Burglar/alarm network Burglar -> Alarm -> {JohnCalls, MaryCalls}. Its CPTs
/// are recovered by inverting the reference single-evidence marginals; see
/// tests/unit/test_builtin.cpp for the derivation.
///
/// Lung cancer Smoke -> Lung_Cancer -> {Cough, Dyspnea}. Structure only: the
/// CPTs are placeholders and metadata()["cpt_status"] == "unverified".
///
/// Throws Error for unknown names.
Network builtin(std::string_view name);
NetworkDocument builtin_document(std::string_view name);

}  // namespace qbn

#endif  // QBN_BUILTIN_HPP
