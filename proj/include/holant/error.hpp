// Copyright 2026 The holant-toolkit Authors
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

namespace holant {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatch (non-square matrix, arity mismatch, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

// Input violates a documented precondition.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed its configured budget. Never truncates silently.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// Rotation system fails the consistency or Euler check.
class EmbeddingError : public Error {
 public:
  using Error::Error;
};

// Malformed input document.
class FormatError : public Error {
 public:
  using Error::Error;
};

// An identity that must hold did not hold.
class VerificationError : public Error {
 public:
  using Error::Error;
};

}  // namespace holant
