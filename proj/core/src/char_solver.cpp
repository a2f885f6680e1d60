// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include "novlab/char_solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "novlab/errors.hpp"
#include "novlab/green.hpp"

namespace novlab {

namespace {

constexpr double kPi = std::numbers::pi;

double metric_factor(const InitialProfile& u0, double x) {
  const double s = u0.slope(x);
  const double m = 1.0 + s * s;
  return m * m;
}

// One RK4 step of dY/dx = (1 + u0'^2)^2.
double advance_y(const InitialProfile& u0, double x, double h, double y) {
  const double k1 = metric_factor(u0, x);
  const double k2 = metric_factor(u0, x + 0.5 * h);
  const double k3 = k2;
  const double k4 = metric_factor(u0, x + h);
  return y + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
}

// One RK4 step of dX/dY = (1 + u0'(X)^2)^{-2}.
double advance_x(const InitialProfile& u0, double x, double h) {
  const auto f = [&u0](double xx) { return 1.0 / metric_factor(u0, xx); };
  const double k1 = f(x);
  const double k2 = f(x + 0.5 * h * k1);
  const double k3 = f(x + 0.5 * h * k2);
  const double k4 = f(x + h * k3);
  return x + h / 6.0 * (k1 + 2 * k2 + 2 * k3 + k4);
}

bool all_finite(const std::vector<double>& a) {
  for (const double v : a)
    if (!std::isfinite(v)) return false;
  return true;
}

std::vector<double> trapezoid_weights(std::size_t n, double dy) {
  std::vector<double> w(n, dy);
  w.front() = 0.5 * dy;
  w.back() = 0.5 * dy;
  return w;
}

}  // namespace

CharState init_from_u0(const InitialProfile& u0, double half_width, int n_nodes) {
  if (n_nodes < 16) throw std::invalid_argument("init_from_u0: N must be >= 16");
  if (!(half_width > 0)) throw std::invalid_argument("init_from_u0: L must be > 0");

  // Y(+-L) by 4th-order integration of dY/dx on a fine substep grid.
  const int substeps = std::max(8 * n_nodes, 4096);
  const double hx = half_width / substeps;
  double y_pos = 0.0, y_neg = 0.0;
  for (int i = 0; i < substeps; ++i) {
    y_pos = advance_y(u0, i * hx, hx, y_pos);
    y_neg = advance_y(u0, -i * hx, -hx, y_neg);
  }

  CharState s;
  s.t = 0.0;
  const std::size_t n = static_cast<std::size_t>(n_nodes);
  s.Y.resize(n);
  s.x.resize(n);
  const double y_lo = y_neg, y_hi = y_pos;
  const double dy = (y_hi - y_lo) / (n_nodes - 1);
  for (std::size_t i = 0; i < n; ++i) s.Y[i] = y_lo + static_cast<double>(i) * dy;

  // x(Y) from X(0) = 0, integrated towards both ends with 4 substeps per cell.
  const auto integrate_to = [&](double y_from, double x_from, double y_to) {
    const int m = 4;
    const double h = (y_to - y_from) / m;
    double x = x_from;
    for (int k = 0; k < m; ++k) x = advance_x(u0, x, h);
    return x;
  };

  // Index of the first node with Y >= 0.
  std::size_t split = 0;
  while (split < n && s.Y[split] < 0.0) ++split;
  if (split < n) {
    double x = integrate_to(0.0, 0.0, s.Y[split]);
    s.x[split] = x;
    for (std::size_t i = split + 1; i < n; ++i) {
      x = integrate_to(s.Y[i - 1], x, s.Y[i]);
      s.x[i] = x;
    }
  }
  if (split > 0) {
    double x = integrate_to(0.0, 0.0, s.Y[split - 1]);
    s.x[split - 1] = x;
    for (std::size_t i = split - 1; i-- > 0;) {
      x = integrate_to(s.Y[i + 1], x, s.Y[i]);
      s.x[i] = x;
    }
  }

  s.u.resize(n);
  s.v.resize(n);
  s.q.assign(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    s.u[i] = u0.value(s.x[i]);
    s.v[i] = 2.0 * std::atan(u0.slope(s.x[i]));
  }
  if (!all_finite(s.u) || !all_finite(s.v) || !all_finite(s.x))
    throw std::invalid_argument("init_from_u0: non-finite profile samples");
  return s;
}

CharDeriv rhs(const CharState& state) {
  const std::size_t n = state.size();
  const NonlocalFields f = nonlocal_fields(state);
  CharDeriv d{std::vector<double>(n), std::vector<double>(n),
              std::vector<double>(n), std::vector<double>(n)};
  for (std::size_t i = 0; i < n; ++i) {
    const double u = state.u[i];
    const double sh = std::sin(0.5 * state.v[i]);
    const double ch = std::cos(0.5 * state.v[i]);
    const double sh2 = sh * sh, ch2 = ch * ch;
    const double sinv = 2.0 * sh * ch;
    const double w = f.P1[i] + f.dxP2[i];
    d.u_t[i] = -f.dxP1[i] - f.P2[i];
    d.v_t[i] = -u * sh2 + 2.0 * u * u * u * ch2 - 2.0 * ch2 * w;
    d.q_t[i] = state.q[i] * ((2.0 * u * u * u + u) - 2.0 * w) * sinv;
    d.x_t[i] = u * u;
  }
  return d;
}

namespace {

CharState apply(const CharState& s, const CharDeriv& d, double h) {
  CharState r = s;
  const std::size_t n = s.size();
  for (std::size_t i = 0; i < n; ++i) {
    r.u[i] = s.u[i] + h * d.u_t[i];
    r.v[i] = s.v[i] + h * d.v_t[i];
    r.q[i] = s.q[i] + h * d.q_t[i];
    r.x[i] = s.x[i] + h * d.x_t[i];
  }
  r.t = s.t + h;
  return r;
}

void accumulate(CharDeriv& acc, const CharDeriv& d, double w) {
  const std::size_t n = acc.u_t.size();
  for (std::size_t i = 0; i < n; ++i) {
    acc.u_t[i] += w * d.u_t[i];
    acc.v_t[i] += w * d.v_t[i];
    acc.q_t[i] += w * d.q_t[i];
    acc.x_t[i] += w * d.x_t[i];
  }
}

double max_abs(const std::vector<double>& a) {
  double m = 0.0;
  for (const double v : a) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace

CharState step_rk4(const CharState& state, double dt) {
  if (!(dt > 0)) throw std::invalid_argument("step_rk4: dt must be > 0");
  const CharDeriv k1 = rhs(state);
  if (dt * max_abs(k1.v_t) >= 0.5)
    throw std::invalid_argument("step_rk4: dt * max|v_T| >= 0.5, reduce dt");
  const CharDeriv k2 = rhs(apply(state, k1, 0.5 * dt));
  const CharDeriv k3 = rhs(apply(state, k2, 0.5 * dt));
  const CharDeriv k4 = rhs(apply(state, k3, dt));
  CharDeriv sum = k1;
  accumulate(sum, k2, 2.0);
  accumulate(sum, k3, 2.0);
  accumulate(sum, k4, 1.0);
  CharState next = apply(state, sum, dt / 6.0);
  next.t = state.t + dt;
  if (!all_finite(next.u) || !all_finite(next.v) || !all_finite(next.q) ||
      !all_finite(next.x))
    throw DivergenceError("step_rk4: non-finite state after step");
  return next;
}

TrajectoryRecord run(CharState state, double dt, double t_end,
                     const RunOptions& options) {
  if (!(dt > 0) || !(t_end > 0))
    throw std::invalid_argument("run: dt and t_end must be > 0");

  TrajectoryRecord rec;
  const std::size_t n = state.size();
  const long long total_steps = static_cast<long long>(std::ceil(t_end / dt - 1e-12));
  const long long coarse_stride =
      std::max<long long>(1, std::llround(options.snapshot_every / dt));
  const long long fine_stride =
      std::max<long long>(1, std::llround(options.snapshot_fine / dt));
  const long long ring_len =
      std::max<long long>(2, std::llround(options.event_window / dt) / fine_stride + 2);

  std::map<long long, CharState> kept;
  std::deque<std::pair<long long, CharState>> ring;
  kept.emplace(0, state);

  const auto record_energy = [&](const CharState& s) {
    rec.energy.push_back(
        {s.t, energy_h1(s), q_total(s), jacobian_min(s).value});
  };
  record_energy(state);

  std::vector<int> sgn(n);
  for (std::size_t i = 0; i < n; ++i)
    sgn[i] = state.v[i] > kPi ? 1 : (state.v[i] < kPi ? -1 : 0);

  rec.stats.min_q = *std::min_element(state.q.begin(), state.q.end());
  rec.stats.max_x_decrease = 0.0;

  double first_event_t = -1.0;
  double keep_fine_until = -1.0;
  double stop_at = std::numeric_limits<double>::infinity();

  long long k = 0;
  bool post_break_floor = false;
  try {
    for (k = 1; k <= total_steps; ++k) {
      CharState next;
      try {
        next = step_rk4(state, dt);
      } catch (const std::invalid_argument& e) {
        if (k == 1) throw;  // the caller's data or dt
        if (first_event_t >= 0.0) {
          // Past breaking, the smooth O(h^2) bias of the evolved x
          // eventually overtakes the collapsing node spacing; the run up to
          // here is valid, so end it rather than fail it.
          rec.stats.stop_reason = std::string("post-breaking step failed: ") + e.what();
          post_break_floor = true;
          break;
        }
        throw DivergenceError(std::string("blow-up: ") + e.what());
      }
      next.t = static_cast<double>(k) * dt;

      const CharDeriv probe = rhs(state);
      rec.stats.max_dt_vt = std::max(rec.stats.max_dt_vt, dt * max_abs(probe.v_t));

      // State invariants: q stays positive, x stays nondecreasing.
      const double q_min = *std::min_element(next.q.begin(), next.q.end());
      rec.stats.min_q = std::min(rec.stats.min_q, q_min);
      if (q_min <= 0.0) throw DivergenceError("run: q lost positivity");
      const double span = next.x.back() - next.x.front();
      bool monotone_floor = false;
      for (std::size_t i = 1; i < n; ++i) {
        const double back = next.x[i - 1] - next.x[i];
        if (back > 0.0) {
          rec.stats.max_x_decrease = std::max(rec.stats.max_x_decrease, back);
          if (back > 1e-10 * std::abs(span)) {
            if (first_event_t < 0.0) throw DivergenceError("run: x lost monotonicity");
            monotone_floor = true;
          }
        }
      }
      if (monotone_floor) {
        // Do not accept the violating step.
        rec.stats.stop_reason = "post-breaking x-monotonicity floor reached";
        post_break_floor = true;
        break;
      }

      // Raw v - pi sign changes at fixed Y.
      bool flipped = false;
      for (std::size_t i = 0; i < n; ++i) {
        const int s_new = next.v[i] > kPi ? 1 : (next.v[i] < kPi ? -1 : 0);
        if (s_new != 0 && sgn[i] != 0 && s_new != sgn[i]) {
          rec.events_raw.push_back({state.t, next.t, static_cast<int>(i),
                                    next.Y[i], state.v[i], next.v[i]});
          flipped = true;
        }
        if (s_new != 0) sgn[i] = s_new;
      }
      if (flipped && first_event_t < 0.0) {
        first_event_t = next.t;
        keep_fine_until = first_event_t + options.event_window;
        // Retroactively keep the fine ring spanning the event.
        for (auto& [step, snap] : ring)
          if (snap.t >= first_event_t - options.event_window)
            kept.emplace(step, std::move(snap));
        ring.clear();
        if (options.stop_after_first_event)
          stop_at = first_event_t + options.stop_margin;
      }

      state = std::move(next);

      if (k % options.energy_every == 0) record_energy(state);
      if (k % coarse_stride == 0) kept.emplace(k, state);
      if (k % fine_stride == 0) {
        if (state.t <= keep_fine_until) {
          kept.emplace(k, state);
        } else if (first_event_t < 0.0) {
          ring.emplace_back(k, state);
          while (static_cast<long long>(ring.size()) > ring_len) ring.pop_front();
        }
      }

      if (state.t >= stop_at) {
        rec.stats.stopped_on_event = true;
        rec.stats.stop_reason = "first v = pi event reached";
        break;
      }
    }
  } catch (const DivergenceError& e) {
    // Preserve what was integrated so far; callers get the last good state.
    kept.emplace(k - 1, state);
    rec.stats.steps = k - 1;
    rec.stats.stop_reason = "divergence";
    for (auto& [step, snap] : kept) {
      if (rec.snapshots.empty() || snap.t > rec.snapshots.back().t + 0.25 * dt)
        rec.snapshots.push_back(std::move(snap));
    }
    throw RunDivergedError(e.what(), std::move(rec));
  }

  const long long last_step = post_break_floor ? k - 1 : std::min(k, total_steps);
  kept.emplace(last_step, state);  // final state always kept
  rec.stats.steps = last_step;
  if (rec.stats.stop_reason.empty()) rec.stats.stop_reason = "t_end reached";

  for (auto& [step, snap] : kept) {
    if (rec.snapshots.empty() || snap.t > rec.snapshots.back().t + 0.25 * dt)
      rec.snapshots.push_back(std::move(snap));
  }
  return rec;
}

double energy_h1(const CharState& state) {
  const std::size_t n = state.size();
  const double dy = state.Y[1] - state.Y[0];
  const std::vector<double> w = trapezoid_weights(n, dy);
  double e = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double sh = std::sin(0.5 * state.v[i]);
    const double ch = std::cos(0.5 * state.v[i]);
    const double sh2 = sh * sh, ch2 = ch * ch;
    e += (state.u[i] * state.u[i] * ch2 * ch2 + sh2 * ch2) * state.q[i] * w[i];
  }
  return e;
}

double q_total(const CharState& state) {
  const std::size_t n = state.size();
  const double dy = state.Y[1] - state.Y[0];
  const std::vector<double> w = trapezoid_weights(n, dy);
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) acc += state.q[i] * w[i];
  return acc;
}

double x_consistency(const CharState& state) {
  const std::size_t n = state.size();
  const double dy = state.Y[1] - state.Y[0];
  const auto jac = [&](std::size_t i) {
    const double ch = std::cos(0.5 * state.v[i]);
    return state.q[i] * ch * ch * ch * ch;
  };
  double acc = state.x[0];
  double worst = 0.0;
  for (std::size_t i = 1; i < n; ++i) {
    acc += 0.5 * dy * (jac(i - 1) + jac(i));
    worst = std::max(worst, std::abs(state.x[i] - acc));
  }
  return worst;
}

JacobianMin jacobian_min(const CharState& state) {
  JacobianMin r{std::numeric_limits<double>::infinity(), 0};
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double ch = std::cos(0.5 * state.v[i]);
    const double j = state.q[i] * ch * ch * ch * ch;
    if (j < r.value) {
      r.value = j;
      r.index = i;
    }
  }
  return r;
}

}  // namespace novlab
