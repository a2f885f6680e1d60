// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/ref_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "novlab/char_solver.hpp"
#include "novlab/errors.hpp"
#include "novlab/green.hpp"
#include "novlab/interp.hpp"

namespace novlab {

namespace {

// 4th-order centered derivative with zero extension beyond the grid
// (decaying data assumption).
std::vector<double> diff4(const std::vector<double>& u, double h) {
  const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(u.size());
  const auto at = [&](std::ptrdiff_t i) { return (i < 0 || i >= n) ? 0.0 : u[static_cast<std::size_t>(i)]; };
  std::vector<double> d(u.size());
  for (std::ptrdiff_t i = 0; i < n; ++i)
    d[static_cast<std::size_t>(i)] =
        (-at(i + 2) + 8.0 * at(i + 1) - 8.0 * at(i - 1) + at(i - 2)) / (12.0 * h);
  return d;
}

bool all_finite(const std::vector<double>& a) {
  for (const double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace

RefState ref_init(const InitialProfile& u0, double half_width, int n_nodes,
                  double slope_cap) {
  if (n_nodes < 16) throw std::invalid_argument("ref_init: N must be >= 16");
  RefState s;
  s.slope_cap = slope_cap;
  s.x.resize(static_cast<std::size_t>(n_nodes));
  s.u.resize(s.x.size());
  const double h = 2.0 * half_width / (n_nodes - 1);
  for (std::size_t i = 0; i < s.x.size(); ++i) {
    s.x[i] = -half_width + static_cast<double>(i) * h;
    s.u[i] = u0.value(s.x[i]);
  }
  if (!all_finite(s.u)) throw std::invalid_argument("ref_init: non-finite samples");
  return s;
}

std::vector<double> ref_rhs(const RefState& state) {
  const std::size_t n = state.size();
  const double h = state.x[1] - state.x[0];
  const std::vector<double> ux = diff4(state.u, h);

  double slope_max = 0.0;
  for (const double s : ux) slope_max = std::max(slope_max, std::abs(s));
  if (slope_max >= state.slope_cap)
    throw BreakdownError("ref_rhs: slope cap reached, x-space window closed");

  std::vector<double> f1(n), f2(n), w(n, h);
  w.front() = 0.5 * h;
  w.back() = 0.5 * h;
  for (std::size_t i = 0; i < n; ++i) {
    const double u = state.u[i], s = ux[i];
    f1[i] = 1.5 * u * s * s + u * u * u;
    f2[i] = 0.5 * s * s * s;
  }
  const ConvExpResult c1 = conv_exp(state.x, f1, w);
  const ConvExpResult c2 = conv_exp(state.x, f2, w);

  std::vector<double> ut(n);
  for (std::size_t i = 0; i < n; ++i)
    ut[i] = -state.u[i] * state.u[i] * ux[i] - c1.DP[i] - c2.P[i];
  return ut;
}

RefState ref_step_rk4(const RefState& state, double dt) {
  const auto shifted = [&](const std::vector<double>& du, double h) {
    RefState r = state;
    for (std::size_t i = 0; i < r.u.size(); ++i) r.u[i] += h * du[i];
    r.t += h;
    return r;
  };
  const std::vector<double> k1 = ref_rhs(state);
  const std::vector<double> k2 = ref_rhs(shifted(k1, 0.5 * dt));
  const std::vector<double> k3 = ref_rhs(shifted(k2, 0.5 * dt));
  const std::vector<double> k4 = ref_rhs(shifted(k3, dt));
  RefState next = state;
  for (std::size_t i = 0; i < next.u.size(); ++i)
    next.u[i] += dt / 6.0 * (k1[i] + 2 * k2[i] + 2 * k3[i] + k4[i]);
  next.t = state.t + dt;
  if (!all_finite(next.u)) throw DivergenceError("ref_step_rk4: non-finite state");
  return next;
}

std::vector<RefState> ref_run(RefState state, double dt, double t_end,
                              double snapshot_every) {
  std::vector<RefState> snaps;
  snaps.push_back(state);
  const long long total = static_cast<long long>(std::ceil(t_end / dt - 1e-12));
  const long long stride = std::max<long long>(1, std::llround(snapshot_every / dt));
  for (long long k = 1; k <= total; ++k) {
    state = ref_step_rk4(state, dt);
    state.t = static_cast<double>(k) * dt;
    if (k % stride == 0 || k == total) snaps.push_back(state);
  }
  return snaps;
}

double ref_energy_h1(const RefState& state) {
  const double h = state.x[1] - state.x[0];
  const std::vector<double> ux = diff4(state.u, h);
  double e = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double w = (i == 0 || i + 1 == state.size()) ? 0.5 * h : h;
    e += (state.u[i] * state.u[i] + ux[i] * ux[i]) * w;
  }
  return e;
}

double compare_solutions(const TrajectoryRecord& char_record,
                         const std::vector<RefState>& ref_snapshots,
                         std::vector<std::pair<double, double>>* per_time) {
  if (char_record.snapshots.empty() || ref_snapshots.empty())
    throw ComparisonImpossibleError("compare: no snapshots");

  // The window closes at the first v = pi event or jacobian degeneracy.
  double window_end = std::numeric_limits<double>::infinity();
  if (!char_record.events_raw.empty())
    window_end = char_record.events_raw.front().t_lo;

  double worst = 0.0;
  bool compared = false;
  for (const RefState& ref : ref_snapshots) {
    const CharState* match = nullptr;
    for (const CharState& snap : char_record.snapshots)
      if (std::abs(snap.t - ref.t) < 1e-9 * (1.0 + std::abs(ref.t))) match = &snap;
    if (match == nullptr) continue;
    if (ref.t > window_end)
      throw ComparisonImpossibleError("compare: time is past the first breaking event");
    if (jacobian_min(*match).value < 1e-3)
      throw ComparisonImpossibleError("compare: characteristic Jacobian below 1e-3");

    const PchipInterpolant interp(match->x, match->u);
    double num = 0.0, den = 0.0;
    for (std::size_t j = 0; j < ref.size(); ++j) {
      if (ref.x[j] < interp.x_min() || ref.x[j] > interp.x_max()) continue;
      const double diff = interp(ref.x[j]) - ref.u[j];
      num += diff * diff;
      den += ref.u[j] * ref.u[j];
    }
    const double dev = den > 0.0 ? std::sqrt(num / den) : (num > 0.0 ? 1.0 : 0.0);
    if (per_time) per_time->emplace_back(ref.t, dev);
    worst = std::max(worst, dev);
    compared = true;
  }
  if (!compared)
    throw ComparisonImpossibleError("compare: no shared snapshot times");
  return worst;
}

}  // namespace novlab
