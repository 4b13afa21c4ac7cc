// Copyright 2026 The NPC Toolkit Authors
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

namespace npc {

// Precondition violations (bad counts, unknown ids, self-loops) are reported
// with std::invalid_argument. The types below are the domain failures callers
// are expected to distinguish.

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two field elements from different FieldContext objects were combined.
class FieldMismatchError : public Error {
 public:
  FieldMismatchError() : Error("field elements belong to different contexts") {}
};

/// More symbols erased than the code protects against.
class CapacityExceededError : public Error {
 public:
  using Error::Error;
};

/// Surviving symbols do not lie on a single codeword.
class InconsistentCodewordError : public Error {
 public:
  using Error::Error;
};

/// Instance exceeds the exact-search tractability guard.
class SearchLimitError : public Error {
 public:
  using Error::Error;
};

/// Graph JSON did not conform to the schema.
class GraphFormatError : public Error {
 public:
  using Error::Error;
};

/// A protection instance admits no witness, so it cannot be provisioned.
class InfeasibleInstanceError : public Error {
 public:
  using Error::Error;
};

}  // namespace npc
