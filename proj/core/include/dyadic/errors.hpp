// Copyright 2026 The dyadic-workbench Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace dyadic {

/// Raised when an operation is called outside its documented domain
/// (finest-level cancellative Haar, exhausted depth, bad exponent, ...).
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Two grid-carrying objects were combined on different grids.
class GridMismatch : public PreconditionError {
 public:
  GridMismatch() : PreconditionError("grid mismatch") {}
  explicit GridMismatch(const std::string& what) : PreconditionError(what) {}
};

/// Malformed experiment or weight configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An experiment would enumerate more elementary terms than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invariant broken inside the library; never expected for valid inputs.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

inline void require(bool condition, const char* message) {
  if (!condition) throw PreconditionError(message);
}

}  // namespace dyadic
