// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Nonlocal fields built from the kernel p(x) = e^{-|x|}/2. The convolution
// and its x-derivative are evaluated in O(N) with forward/backward
// exponential scans, which reproduce the direct double sum to rounding.

#pragma once

#include <span>
#include <vector>

#include "novlab/char_state.hpp"

namespace novlab {

struct ConvExpResult {
  std::vector<double> P;   // sum_j p(x_i - x_j) g_j w_j
  std::vector<double> DP;  // sum_j p'(x_i - x_j) g_j w_j, sign(0) = 0
};

/// x must be nondecreasing and all inputs finite. The j = i term contributes
/// g_i w_i / 2 to P_i and nothing to DP_i.
ConvExpResult conv_exp(std::span<const double> x, std::span<const double> g,
                       std::span<const double> weights);

/// Densities of the two kernel sources in Y variables (already multiplied by
/// dx/dY), bounded for every v including v = pi:
///   F1 = [(3/2) u sin^2(v/2) cos^2(v/2) + u^3 cos^4(v/2)] q
///   F2 = (1/2) q sin^3(v/2) cos(v/2)
struct SourceDensities {
  std::vector<double> F1;
  std::vector<double> F2;
};

SourceDensities source_densities(const CharState& state);

struct NonlocalFields {
  std::vector<double> P1;
  std::vector<double> dxP1;
  std::vector<double> P2;
  std::vector<double> dxP2;
};

/// Trapezoid weights in Y; decreasing jitter in x up to 1e-12 * span is
/// clamped, anything larger is a usage error.
NonlocalFields nonlocal_fields(const CharState& state);

}  // namespace novlab
