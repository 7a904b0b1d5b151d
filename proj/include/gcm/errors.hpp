// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace gcm {

// Malformed user input: bad files, out-of-range ids, violated argument
// contracts.  Maps to CLI exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The mathematical hypothesis of an operation does not hold for the given
// graph (e.g. a structured algorithm invoked on a graph that is not trivalent
// or not 2-edge-connected).  Treated as an input error by the CLI.
class PreconditionError : public InputError {
 public:
  using InputError::InputError;
};

// The instance exceeds a configured enumeration bound.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A randomized genericity search exhausted its attempt budget.  Carries the
// seed so the failing run can be replayed.
class GenericityError : public std::runtime_error {
 public:
  GenericityError(const std::string& what, unsigned long long seed)
      : std::runtime_error(what + " (seed " + std::to_string(seed) + ")"),
        seed_(seed) {}
  unsigned long long seed() const { return seed_; }

 private:
  unsigned long long seed_;
};

}  // namespace gcm
