// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace novlab {

/// Requested quantity is not resolvable at the current truncation order;
/// retry with a larger K.
class TruncationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Time integration produced non-finite values or violated a state invariant.
class DivergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The two solvers have no shared pre-breaking window to compare on.
class ComparisonImpossibleError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fit window contains too few usable samples.
class WindowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fit abscissae (or ordinates) have zero spread; no slope is defined.
class DegenerateFitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The x-space description has stopped being meaningful (slope cap hit).
class BreakdownError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact trig seeds exist only for angle base points 0 and pi.
class UnsupportedSeedError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace novlab
