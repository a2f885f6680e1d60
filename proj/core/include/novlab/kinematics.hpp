// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Singular-point kinematics in characteristic variables. Everything here is
// local jet algebra at a hypothetical point with v = pi: the Jacobian factor
// x_Y = q cos^4(v/2), the slope product u_Y = u_x x_Y, their antiderivatives,
// and the in-time derivatives driven by the semilinear evolution. The same
// formulas with the Camassa-Holm weight (q cos^2, q sin cos) give the
// contrast mode.

#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "novlab/errors.hpp"
#include "novlab/jet.hpp"

namespace novlab {

enum class Model { Novikov, CamassaHolm };

inline const char* model_name(Model m) {
  return m == Model::Novikov ? "novikov" : "ch";
}

/// Local data at a singular-point candidate: jets in s = Y - Y0 of the angle
/// v (base point pi), the weight q (positive), plus free smooth jets for u
/// and the nonlocal field W = P1 + dxP2 used by the in-time derivatives.
template <class T>
struct SingularPointConfig {
  Model model = Model::Novikov;
  Angle<T> v;
  Jet<T> q;
  T u0{};
  std::optional<Jet<T>> u;  // defaults to the constant jet u0
  std::optional<Jet<T>> w;  // defaults to zero

  SingularPointConfig(Model m, Angle<T> v_in, Jet<T> q_in, T u0_in = T(0))
      : model(m), v(std::move(v_in)), q(std::move(q_in)), u0(std::move(u0_in)) {
    if (v.offset.order() != q.order())
      throw std::invalid_argument("config jets must share one order");
    if (!(q[0] > T(0)))
      throw std::invalid_argument("q must have positive constant term");
  }

  int order() const { return q.order(); }

  Jet<T> u_jet() const {
    if (u) {
      if (u->order() != order()) throw std::invalid_argument("u jet order mismatch");
      return *u;
    }
    return Jet<T>::constant(order(), u0);
  }

  Jet<T> w_jet() const {
    if (w) {
      if (w->order() != order()) throw std::invalid_argument("w jet order mismatch");
      return *w;
    }
    return Jet<T>(order());
  }
};

// --- kinematic products ----------------------------------------------------

template <class T>
Jet<T> u_y_jet(Model model, const Angle<T>& v, const Jet<T>& q) {
  const auto t = trig_half(v);
  if (model == Model::Novikov) return q * t.sin * pow(t.cos, 3);
  return q * t.sin * t.cos;
}

template <class T>
Jet<T> x_y_jet(Model model, const Angle<T>& v, const Jet<T>& q) {
  const auto t = trig_half(v);
  return q * pow(t.cos, model == Model::Novikov ? 4 : 2);
}

template <class T>
Jet<T> u_y_jet(const SingularPointConfig<T>& cfg) {
  return u_y_jet(cfg.model, cfg.v, cfg.q);
}

template <class T>
Jet<T> x_y_jet(const SingularPointConfig<T>& cfg) {
  return x_y_jet(cfg.model, cfg.v, cfg.q);
}

// --- in-time derivatives from the semilinear system ------------------------

/// dv/dT = -u sin^2(v/2) + 2 u^3 cos^2(v/2) - 2 cos^2(v/2) W, as a jet in s.
template <class T>
Jet<T> v_t_jet(const SingularPointConfig<T>& cfg) {
  const auto t = trig_half(cfg.v);
  const Jet<T> u = cfg.u_jet();
  const Jet<T> w = cfg.w_jet();
  const Jet<T> sh2 = t.sin * t.sin;
  const Jet<T> ch2 = t.cos * t.cos;
  return -(u * sh2) + scale(pow(u, 3) * ch2, T(2)) - scale(ch2 * w, T(2));
}

/// dq/dT = q [(2u^3 + u) - 2W] sin v, with sin v = 2 sin(v/2) cos(v/2).
template <class T>
Jet<T> q_t_jet(const SingularPointConfig<T>& cfg) {
  const auto t = trig_half(cfg.v);
  const Jet<T> u = cfg.u_jet();
  const Jet<T> w = cfg.w_jet();
  const Jet<T> sin_v = scale(t.sin * t.cos, T(2));
  return cfg.q * (scale(pow(u, 3), T(2)) + u - scale(w, T(2))) * sin_v;
}

// --- order analysis ---------------------------------------------------------

template <class T>
struct OrderReport {
  Model model = Model::Novikov;
  int ord_u = 0;
  int ord_x = 0;
  T lead_u{};
  T lead_x{};
  T exponent{};
  std::map<std::string, T> claims;   // published closed-form values
  std::map<std::string, T> oracle;   // same keys, computed from the jets
  std::vector<std::string> discrepancies;
};

namespace detail {

template <class T>
T factorial(int n) {
  T f(1);
  for (int i = 2; i <= n; ++i) f *= T(i);
  return f;
}

inline std::string coeff_string(const Rational& r) { return to_string(r); }
inline std::string coeff_string(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

template <class T>
bool values_differ(const T& a, const T& b) {
  if constexpr (std::is_same_v<T, Rational>) {
    return a != b;
  } else {
    const double s = 1.0 + std::abs(a) + std::abs(b);
    return std::abs(a - b) > 1e-9 * s;
  }
}

template <class T>
T ratio(int num, int den) {
  if constexpr (std::is_same_v<T, Rational>) {
    return Rational(num, den);
  } else {
    return static_cast<T>(num) / static_cast<T>(den);
  }
}

}  // namespace detail

/// The displayed closed forms of the reference derivation, evaluated verbatim
/// at v = pi with this config's v_Y, v_YY and q. These are recorded claims,
/// not ground truth; orders() compares them against the jet computation.
template <class T>
std::map<std::string, T> claimed_formulas(const SingularPointConfig<T>& cfg) {
  std::map<std::string, T> claims;
  if (cfg.model != Model::Novikov || cfg.v.base != AngleTag::Pi) return claims;
  if (cfg.order() < 2) return claims;
  const T v_y = cfg.v.offset[1];
  const T v_yy = T(2) * cfg.v.offset[2];
  const T q0 = cfg.q[0];
  if (v_y != T(0)) {
    // Transversal case: u_Y4 as finally stated; x_Y5 = (3/2) q v_Y^3 cos^3 v.
    claims["u_Y4"] = q0 * v_y * v_y * v_y / T(2);
    claims["x_Y5"] = T(-3) * q0 * v_y * v_y * v_y / T(2);
    claims["ord_u"] = T(4);
    claims["ord_x"] = T(5);
  } else if (v_yy != T(0)) {
    // Tangential case: u_Y6 = (6/8) q v_YY^3 cos v sin^2(v/2) - 3 v_YY^3 q cos^2 v;
    // x_Y8 = 36 q v_YY^4 sin^4(v/2). At v = pi these reduce to the values below.
    const T v_yy3 = v_yy * v_yy * v_yy;
    claims["u_Y6"] = T(-15) * q0 * v_yy3 / T(4);
    claims["x_Y8"] = T(36) * q0 * v_yy3 * v_yy;
    claims["ord_u"] = T(6);
    claims["ord_x"] = T(8);
  }
  return claims;
}

/// Antidifferentiates the kinematic products, extracts vanishing orders and
/// leading coefficients of u - u0 and x - x0, and compares the claimed
/// closed forms against the jets. Disagreements are listed, never resolved.
template <class T>
OrderReport<T> orders(const SingularPointConfig<T>& cfg, double tol = 0.0) {
  const Jet<T> u_series = antiderivative(u_y_jet(cfg), T(0));
  const Jet<T> x_series = antiderivative(x_y_jet(cfg), T(0));
  const auto ord_u = vanishing_order(u_series, tol);
  const auto ord_x = vanishing_order(x_series, tol);
  if (!ord_u || !ord_x) {
    std::ostringstream os;
    os << "vanishing order not found within K = " << cfg.order()
       << "; raise the truncation order";
    throw TruncationError(os.str());
  }

  OrderReport<T> rep;
  rep.model = cfg.model;
  rep.ord_u = *ord_u;
  rep.ord_x = *ord_x;
  rep.lead_u = u_series[rep.ord_u];
  rep.lead_x = x_series[rep.ord_x];
  rep.exponent = detail::ratio<T>(rep.ord_u, rep.ord_x);
  rep.claims = claimed_formulas(cfg);

  for (const auto& [key, claim] : rep.claims) {
    T value{};
    if (key == "ord_u") {
      value = T(rep.ord_u);
    } else if (key == "ord_x") {
      value = T(rep.ord_x);
    } else {
      // u_Yn / x_Yn derivative values, recovered as n! * c_n.
      const bool on_u = key[0] == 'u';
      const int n = std::stoi(key.substr(3));
      if (n > cfg.order()) throw TruncationError("claim order exceeds K");
      value = detail::factorial<T>(n) * (on_u ? u_series[n] : x_series[n]);
    }
    rep.oracle[key] = value;
    if (detail::values_differ(claim, value)) {
      rep.discrepancies.push_back(key + ": claimed " + detail::coeff_string(claim) +
                                  ", computed " + detail::coeff_string(value));
    }
  }
  return rep;
}

// --- mixed in-time orders ----------------------------------------------------

template <class T>
struct MixedOrders {
  Jet<T> du_y_dt;  // d/dT of u_Y(s)
  Jet<T> dx_y_dt;  // d/dT of x_Y(s)
  std::optional<int> ord_du_y_dt;
  std::optional<int> ord_dx_y_dt;
};

/// Product/chain rule applied to the kinematic products, using the
/// semilinear right-hand sides for dv/dT and dq/dT. The vanishing order of
/// d/dT u_Y(s) encodes which mixed derivatives u_{Y^k t} vanish at the point.
template <class T>
MixedOrders<T> mixed_orders(const SingularPointConfig<T>& cfg, double tol = 0.0) {
  const auto t = trig_half(cfg.v);
  const Jet<T> vt = v_t_jet(cfg);
  const Jet<T> qt = q_t_jet(cfg);
  const T half = T(1) / T(2);

  MixedOrders<T> r{Jet<T>(cfg.order()), Jet<T>(cfg.order()), {}, {}};
  if (cfg.model == Model::Novikov) {
    const Jet<T> ch2 = t.cos * t.cos;
    const Jet<T> ch3 = ch2 * t.cos;
    const Jet<T> ch4 = ch2 * ch2;
    r.du_y_dt = qt * t.sin * ch3 + scale(cfg.q * vt * ch4, half) -
                scale(cfg.q * vt * t.sin * t.sin * ch2, T(3) * half);
    r.dx_y_dt = qt * ch4 - scale(cfg.q * vt * t.sin * ch3, T(2));
  } else {
    const Jet<T> sh2 = t.sin * t.sin;
    const Jet<T> ch2 = t.cos * t.cos;
    r.du_y_dt = qt * t.sin * t.cos + scale(cfg.q * vt * (ch2 - sh2), half);
    r.dx_y_dt = qt * ch2 - scale(cfg.q * vt * t.sin * t.cos, T(2));
  }
  r.ord_du_y_dt = vanishing_order(r.du_y_dt, tol);
  r.ord_dx_y_dt = vanishing_order(r.dx_y_dt, tol);
  return r;
}

// --- synthetic local profiles -----------------------------------------------

struct CurveSample {
  double x = 0.0;  // x(s) - x0
  double u = 0.0;  // u(s)
  bool trusted = true;
};

namespace detail {

// Truncation-trust check: the last retained nonzero term must stay below 1%
// of the leading term at this s.
inline bool within_trust(const Jet<double>& series, double s) {
  int lead = -1, last = -1;
  for (int n = 0; n <= series.order(); ++n) {
    if (series[n] != 0.0) {
      if (lead < 0) lead = n;
      last = n;
    }
  }
  if (lead < 0 || last == lead) return true;
  const double head = std::abs(series[lead]) * std::pow(std::abs(s), lead);
  const double tail = std::abs(series[last]) * std::pow(std::abs(s), last);
  return tail <= 0.01 * head;
}

inline Jet<double> as_double_jet(const Jet<double>& a) { return a; }
inline Jet<double> as_double_jet(const Jet<Rational>& a) { return to_double_jet(a); }

inline double as_double_value(double v) { return v; }
inline double as_double_value(const Rational& v) { return to_double(v); }

}  // namespace detail

/// Evaluates the local parametric curve s -> (x(s) - x0, u(s)); samples
/// outside the truncation trust region carry a warning flag.
template <class T>
std::vector<CurveSample> synth_curve(const SingularPointConfig<T>& cfg,
                                     const std::vector<double>& s_values) {
  const Jet<double> u_series =
      detail::as_double_jet(antiderivative(u_y_jet(cfg), T(0)));
  const Jet<double> x_series =
      detail::as_double_jet(antiderivative(x_y_jet(cfg), T(0)));
  const double u0 = detail::as_double_value(cfg.u0);

  std::vector<CurveSample> out;
  out.reserve(s_values.size());
  for (const double s : s_values) {
    CurveSample c;
    c.x = evaluate(x_series, s);
    c.u = u0 + evaluate(u_series, s);
    c.trusted = detail::within_trust(u_series, s) && detail::within_trust(x_series, s);
    out.push_back(c);
  }
  return out;
}

}  // namespace novlab
