// Copyright 2026 The bellgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bellgames {

/// Bad user input: malformed files, incompatible dimensions, unknown
/// builtin names, broken distributions. CLI exit code 1.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Lookup of a builtin object that does not exist.
class NotFoundError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

/// A request whose exhaustive enumeration would exceed the hard cap.
/// CLI exit code 2.
class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal invariant was breached (solver failure, bound mismatch,
/// non-finite value). CLI exit code 3.
class IntegrityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bellgames
