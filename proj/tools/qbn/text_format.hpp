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


#ifndef QBN_TOOLS_TEXT_FORMAT_HPP
#define QBN_TOOLS_TEXT_FORMAT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Number formatting and parsing that ignores the C and C++ locales.

namespace qbn::cli {

/// Fixed notation with `precision` decimals; never prints "-0.000".
std::string fixed(double value, int precision);

/// Shortest text that reads back as the same double.
std::string shortest(double value);

std::optional<double> parse_double(std::string_view text);

/// Numbers separated by commas and/or whitespace. Returns std::nullopt on
/// any malformed token.
std::optional<std::vector<double>> parse_number_list(std::string_view text);

}  // namespace qbn::cli

#endif  // QBN_TOOLS_TEXT_FORMAT_HPP
