// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <vector>

namespace novlab {

/// Monotone piecewise-cubic (Fritsch-Carlson) interpolant; preserves the
/// monotonicity of the data, which keeps resampled wave profiles free of
/// overshoot near steep fronts.
class PchipInterpolant {
 public:
  PchipInterpolant(std::vector<double> x, std::vector<double> y);

  double operator()(double x) const;
  double derivative(double x) const;

  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::size_t interval(double x) const;

  std::vector<double> x_, y_, d_;
};

/// Cubic Lagrange interpolation through the four nodes nearest xq (stencil
/// shifted at the ends). Nodes must be strictly increasing.
double interp_cubic(std::span<const double> x, std::span<const double> f, double xq);

}  // namespace novlab
