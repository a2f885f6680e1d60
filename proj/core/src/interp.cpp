// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/interp.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace novlab {

namespace {

double sign(double v) { return v > 0 ? 1.0 : (v < 0 ? -1.0 : 0.0); }

// Shape-preserving one-sided end slope (Fritsch-Butland style clipping).
double end_slope(double h0, double h1, double d0, double d1) {
  double d = ((2.0 * h0 + h1) * d0 - h0 * d1) / (h0 + h1);
  if (sign(d) != sign(d0)) return 0.0;
  if (sign(d0) != sign(d1) && std::abs(d) > 3.0 * std::abs(d0)) return 3.0 * d0;
  return d;
}

}  // namespace

PchipInterpolant::PchipInterpolant(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const std::size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::invalid_argument("pchip: need >= 2 matching samples");
  for (std::size_t i = 1; i < n; ++i)
    if (!(x_[i] > x_[i - 1]))
      throw std::invalid_argument("pchip: x must be strictly increasing");

  std::vector<double> h(n - 1), delta(n - 1);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    h[i] = x_[i + 1] - x_[i];
    delta[i] = (y_[i + 1] - y_[i]) / h[i];
  }

  d_.assign(n, 0.0);
  if (n == 2) {
    d_[0] = d_[1] = delta[0];
    return;
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    if (delta[i - 1] * delta[i] <= 0.0) {
      d_[i] = 0.0;
    } else {
      const double w1 = 2.0 * h[i] + h[i - 1];
      const double w2 = h[i] + 2.0 * h[i - 1];
      d_[i] = (w1 + w2) / (w1 / delta[i - 1] + w2 / delta[i]);
    }
  }
  d_[0] = end_slope(h[0], h[1], delta[0], delta[1]);
  d_[n - 1] = end_slope(h[n - 2], h[n - 3], delta[n - 2], delta[n - 3]);
}

std::size_t PchipInterpolant::interval(double x) const {
  if (x <= x_.front()) return 0;
  if (x >= x_.back()) return x_.size() - 2;
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  return static_cast<std::size_t>(it - x_.begin()) - 1;
}

double PchipInterpolant::operator()(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t, t3 = t2 * t;
  const double h00 = 2 * t3 - 3 * t2 + 1;
  const double h10 = t3 - 2 * t2 + t;
  const double h01 = -2 * t3 + 3 * t2;
  const double h11 = t3 - t2;
  return h00 * y_[i] + h * h10 * d_[i] + h01 * y_[i + 1] + h * h11 * d_[i + 1];
}

double PchipInterpolant::derivative(double x) const {
  const std::size_t i = interval(x);
  const double h = x_[i + 1] - x_[i];
  const double t = (x - x_[i]) / h;
  const double t2 = t * t;
  const double dh00 = (6 * t2 - 6 * t) / h;
  const double dh10 = 3 * t2 - 4 * t + 1;
  const double dh01 = (-6 * t2 + 6 * t) / h;
  const double dh11 = 3 * t2 - 2 * t;
  return dh00 * y_[i] + dh10 * d_[i] + dh01 * y_[i + 1] + dh11 * d_[i + 1];
}

double interp_cubic(std::span<const double> x, std::span<const double> f, double xq) {
  const std::size_t n = x.size();
  if (n < 2 || f.size() != n) throw std::invalid_argument("interp_cubic: bad inputs");
  if (n < 4) {
    // Fall back to linear on tiny stencils.
    const std::size_t i = xq <= x[0] ? 0 : (xq >= x[n - 1] ? n - 2 : 0);
    const double t = (xq - x[i]) / (x[i + 1] - x[i]);
    return (1 - t) * f[i] + t * f[i + 1];
  }
  const auto it = std::upper_bound(x.begin(), x.end(), xq);
  std::ptrdiff_t i = (it - x.begin()) - 1;
  std::ptrdiff_t lo = std::clamp<std::ptrdiff_t>(i - 1, 0, static_cast<std::ptrdiff_t>(n) - 4);
  double acc = 0.0;
  for (std::ptrdiff_t a = lo; a < lo + 4; ++a) {
    double term = f[static_cast<std::size_t>(a)];
    for (std::ptrdiff_t b = lo; b < lo + 4; ++b) {
      if (a == b) continue;
      term *= (xq - x[static_cast<std::size_t>(b)]) /
              (x[static_cast<std::size_t>(a)] - x[static_cast<std::size_t>(b)]);
    }
    acc += term;
  }
  return acc;
}

}  // namespace novlab
