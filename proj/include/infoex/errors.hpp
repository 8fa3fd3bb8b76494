// Copyright 2026 The infoex Authors
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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace infoex {

/// Base class for every domain error raised by the library. The CLI maps
/// these to exit status 1.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by model parsing and validation.
class ModelError : public Error {
 public:
  enum class Kind {
    kSyntax,
    kPriorNotNormalized,
    kMissingUtility,
    kDuplicateLabel,
    kInvalid,
  };

  ModelError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Raised when a computation would exceed one of the configured budgets.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string budget, std::uint64_t limit, std::uint64_t requested)
      : Error(budget + " budget exceeded: requested " + std::to_string(requested) +
              ", limit " + std::to_string(limit)),
        budget_(std::move(budget)),
        limit_(limit),
        requested_(requested) {}

  const std::string& budget() const noexcept { return budget_; }
  std::uint64_t limit() const noexcept { return limit_; }
  std::uint64_t requested() const noexcept { return requested_; }

 private:
  std::string budget_;
  std::uint64_t limit_;
  std::uint64_t requested_;
};

/// Precondition violations on otherwise well-formed inputs (empty
/// questionnaires, mismatched horizons, fallback outside the image...).
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Exact arithmetic left the representable range.
class Overflow : public Error {
 public:
  using Error::Error;
};

}  // namespace infoex
