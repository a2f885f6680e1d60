// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/green.hpp"

#include <cmath>
#include <stdexcept>

namespace novlab {

namespace {

void check_finite(std::span<const double> a, const char* what) {
  for (const double v : a)
    if (!std::isfinite(v)) throw std::invalid_argument(std::string("non-finite ") + what);
}

}  // namespace

ConvExpResult conv_exp(std::span<const double> x, std::span<const double> g,
                       std::span<const double> weights) {
  const std::size_t n = x.size();
  if (g.size() != n || weights.size() != n)
    throw std::invalid_argument("conv_exp: array length mismatch");
  ConvExpResult r{std::vector<double>(n), std::vector<double>(n)};
  if (n == 0) return r;
  check_finite(x, "x");
  check_finite(g, "g");
  check_finite(weights, "weights");
  for (std::size_t i = 1; i < n; ++i)
    if (x[i] < x[i - 1]) throw std::invalid_argument("conv_exp: x not nondecreasing");

  // L_i = sum_{j<=i} e^{-(x_i-x_j)} g_j w_j, built left to right.
  std::vector<double> gw(n);
  for (std::size_t i = 0; i < n; ++i) gw[i] = g[i] * weights[i];

  std::vector<double> left(n), right(n);
  left[0] = gw[0];
  for (std::size_t i = 1; i < n; ++i)
    left[i] = left[i - 1] * std::exp(-(x[i] - x[i - 1])) + gw[i];
  right[n - 1] = gw[n - 1];
  for (std::size_t i = n - 1; i-- > 0;)
    right[i] = right[i + 1] * std::exp(-(x[i + 1] - x[i])) + gw[i];

  for (std::size_t i = 0; i < n; ++i) {
    r.P[i] = 0.5 * (left[i] + right[i] - gw[i]);
    r.DP[i] = 0.5 * (right[i] - left[i]);
  }
  return r;
}

SourceDensities source_densities(const CharState& state) {
  const std::size_t n = state.size();
  SourceDensities d{std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double sh = std::sin(0.5 * state.v[i]);
    const double ch = std::cos(0.5 * state.v[i]);
    const double sh2 = sh * sh, ch2 = ch * ch;
    const double u = state.u[i], q = state.q[i];
    d.F1[i] = (1.5 * u * sh2 * ch2 + u * u * u * ch2 * ch2) * q;
    d.F2[i] = 0.5 * q * sh2 * sh * ch;
  }
  return d;
}

NonlocalFields nonlocal_fields(const CharState& state) {
  const std::size_t n = state.size();
  if (n < 2) throw std::invalid_argument("nonlocal_fields: need >= 2 nodes");

  const double span = state.x.back() - state.x.front();
  const double clamp_tol = 1e-12 * std::abs(span);
  std::vector<double> x = state.x;
  for (std::size_t i = 1; i < n; ++i) {
    if (x[i] < x[i - 1]) {
      if (x[i - 1] - x[i] > clamp_tol)
        throw std::invalid_argument("nonlocal_fields: x decreasing beyond tolerance");
      x[i] = x[i - 1];
    }
  }

  const double dy = state.Y[1] - state.Y[0];
  std::vector<double> w(n, dy);
  w.front() = 0.5 * dy;
  w.back() = 0.5 * dy;

  const SourceDensities d = source_densities(state);
  ConvExpResult c1 = conv_exp(x, d.F1, w);
  ConvExpResult c2 = conv_exp(x, d.F2, w);
  return NonlocalFields{std::move(c1.P), std::move(c1.DP), std::move(c2.P),
                        std::move(c2.DP)};
}

}  // namespace novlab
