// Copyright 2026 The ternlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace ternlab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class NotHermitian : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs the operator realization but the space is
/// only known through structure constants.
class NormUnavailable : public Error {
 public:
  using Error::Error;
};

class DecompositionInconclusive : public Error {
 public:
  using Error::Error;
};

class NotAnIdeal : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class SolverBudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ClosureDidNotStabilize : public Error {
 public:
  using Error::Error;
};

}  // namespace ternlab
