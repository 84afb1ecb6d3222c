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

#ifndef QBN_ERROR_HPP
#define QBN_ERROR_HPP

#include <stdexcept>
#include <string>
#include <vector>

namespace qbn {

struct Violation;

/// Base class of every exception thrown by qbn.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// File could not be read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// Malformed network document: invalid JSON or a value of the wrong shape.
/// `path()` is a JSON pointer to the offending location ("" for the root).
class ParseError : public Error {
 public:
  ParseError(std::string path, const std::string& message)
      : Error(path.empty() ? message : path + ": " + message),
        path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

/// Well-formed document describing an invalid network.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<Violation> violations);

  const std::vector<Violation>& violations() const noexcept {
    return violations_;
  }

 private:
  std::vector<Violation> violations_;
};

/// Bad query, evidence, assignment or phase vector passed to inference.
class InferenceError : public Error {
 public:
  using Error::Error;
};

/// The evidence (or the interference-weighted mass) is zero, so the
/// normalization factor is undefined.
class ZeroMassError : public InferenceError {
 public:
  using InferenceError::InferenceError;
};

/// Invalid search or sweep request.
class SearchError : public Error {
 public:
  using Error::Error;
};

/// Target probability outside what the phase family can attain.
class RangeError : public SearchError {
 public:
  RangeError(double target, double low, double high);

  double low() const noexcept { return low_; }
  double high() const noexcept { return high_; }

 private:
  double low_;
  double high_;
};

}  // namespace qbn

#endif  // QBN_ERROR_HPP
