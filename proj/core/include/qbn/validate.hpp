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

#ifndef QBN_VALIDATE_HPP
#define QBN_VALIDATE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "qbn/network.hpp"
#include "qbn/network_io.hpp"

namespace qbn {

enum class ViolationCode {
  EmptyName,
  DuplicateVariable,
  NoStates,
  DuplicateState,
  InvalidStateLabel,
  UnknownVariable,
  UnknownParent,
  DuplicateParent,
  CycleDetected,
  MissingCpt,
  MissingRow,
  UnknownRow,
  RowLength,
  EntryOutOfRange,
  RowNotNormalized,
};

std::string_view to_string(ViolationCode code);

struct Violation {
  ViolationCode code;
  /// JSON pointer into the document, e.g. "/cpt/G2/Win".
  std::string path;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// "CODE path: message"
std::string format(const Violation& v);

inline constexpr double kRowTolerance = 1e-9;

/// Every invariant violation in the document; empty iff build_network()
/// would succeed.
std::vector<Violation> validate(const NetworkDocument& doc);

/// Re-checks a built network through its document form.
std::vector<Violation> validate(const Network& net);

}  // namespace qbn

#endif  // QBN_VALIDATE_HPP
