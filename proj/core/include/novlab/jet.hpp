// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0
//
// Truncated univariate Taylor series (jets) in a formal variable s, over
// exact rationals or doubles. A jet of order K stores c_0..c_K with
// c_n = f^(n)(0)/n!; products are Cauchy products truncated at degree K.

#pragma once

#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <vector>

#include "novlab/errors.hpp"
#include "novlab/rational.hpp"

namespace novlab {

template <class T>
class Jet {
 public:
  using value_type = T;

  explicit Jet(int order) : c_(check_order(order) + 1) {}

  Jet(int order, std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != check_order(order) + 1)
      throw std::invalid_argument("jet coefficient count must be order + 1");
  }

  /// Order is deduced as size - 1.
  static Jet from_coeffs(std::vector<T> coeffs) {
    if (coeffs.empty()) throw std::invalid_argument("jet needs >= 1 coefficient");
    const int order = static_cast<int>(coeffs.size()) - 1;
    return Jet(order, std::move(coeffs));
  }

  static Jet constant(int order, T value) {
    Jet j(order);
    j.c_[0] = std::move(value);
    return j;
  }

  /// c0 + s. Requires order >= 1.
  static Jet variable(int order, T c0) {
    if (order < 1) throw std::invalid_argument("variable jet needs order >= 1");
    Jet j(order);
    j.c_[0] = std::move(c0);
    j.c_[1] = T(1);
    return j;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const T& operator[](int i) const { return c_.at(static_cast<std::size_t>(i)); }
  T& operator[](int i) { return c_.at(static_cast<std::size_t>(i)); }

  const std::vector<T>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const T& c : c_)
      if (c != T(0)) return false;
    return true;
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

  Jet operator-() const {
    Jet r = *this;
    for (T& c : r.c_) c = -c;
    return r;
  }

  friend Jet operator+(const Jet& a, const Jet& b) {
    check_same_order(a, b);
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.c_[i] += b.c_[i];
    return r;
  }

  friend Jet operator-(const Jet& a, const Jet& b) {
    check_same_order(a, b);
    Jet r = a;
    for (int i = 0; i <= r.order(); ++i) r.c_[i] -= b.c_[i];
    return r;
  }

  /// Cauchy product; degrees above K are discarded silently (standard jet
  /// truncation semantics).
  friend Jet operator*(const Jet& a, const Jet& b) {
    check_same_order(a, b);
    const int k = a.order();
    Jet r(k);
    for (int i = 0; i <= k; ++i) {
      if (a.c_[i] == T(0)) continue;
      for (int j = 0; i + j <= k; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  friend Jet operator*(const Jet& a, const T& k) {
    Jet r = a;
    for (T& c : r.c_) c *= k;
    return r;
  }

  friend Jet operator*(const T& k, const Jet& a) { return a * k; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("jet order must be >= 0");
    return order;
  }

  static void check_same_order(const Jet& a, const Jet& b) {
    if (a.order() != b.order())
      throw std::invalid_argument("jet order mismatch in binary operation");
  }

  std::vector<T> c_;
};

template <class T>
Jet<T> scale(const Jet<T>& a, const T& k) {
  return a * k;
}

/// Integer power by repeated multiplication (n >= 0).
template <class T>
Jet<T> pow(const Jet<T>& a, int n) {
  if (n < 0) throw std::invalid_argument("jet pow: negative exponent");
  Jet<T> r = Jet<T>::constant(a.order(), T(1));
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

/// d/ds. The result keeps the same order; its top coefficient is zero.
template <class T>
Jet<T> derivative(const Jet<T>& a) {
  const int k = a.order();
  Jet<T> r(k);
  for (int n = 0; n < k; ++n) r[n] = T(n + 1) * a[n + 1];
  return r;
}

/// Antiderivative with constant term c0; the degree-K input coefficient is
/// discarded (the result is again an order-K jet).
template <class T>
Jet<T> antiderivative(const Jet<T>& a, T c0) {
  const int k = a.order();
  Jet<T> r(k);
  r[0] = std::move(c0);
  for (int n = 1; n <= k; ++n) r[n] = a[n - 1] / T(n);
  return r;
}

/// Index of the first coefficient with |c_n| > tol; absent when every
/// coefficient is below tol. Absent means "order exceeds K", not
/// "identically zero". Exact jets require tol == 0.
template <class T>
std::optional<int> vanishing_order(const Jet<T>& a, double tol = 0.0) {
  if constexpr (std::is_same_v<T, Rational>) {
    if (tol != 0.0)
      throw std::invalid_argument("exact-rational jets require tol == 0");
    for (int n = 0; n <= a.order(); ++n)
      if (a[n] != 0) return n;
  } else {
    if (tol < 0.0) throw std::invalid_argument("vanishing_order: tol < 0");
    for (int n = 0; n <= a.order(); ++n)
      if (std::abs(a[n]) > tol) return n;
  }
  return std::nullopt;
}

/// Horner evaluation at s.
template <class T>
T evaluate(const Jet<T>& a, const T& s) {
  T acc = a[a.order()];
  for (int n = a.order() - 1; n >= 0; --n) acc = acc * s + a[n];
  return acc;
}

inline Jet<double> to_double_jet(const Jet<Rational>& a) {
  Jet<double> r(a.order());
  for (int n = 0; n <= a.order(); ++n) r[n] = to_double(a[n]);
  return r;
}

// ---------------------------------------------------------------------------
// Angles and trigonometric jets.
//
// Angle base points are kept symbolic so that sin and cos of 0 and pi/2 are
// exact in rational mode; the remaining angle dependence is an offset jet
// with zero constant term.
// ---------------------------------------------------------------------------

enum class AngleTag { Zero, Pi };

template <class T>
struct Angle {
  AngleTag base;
  Jet<T> offset;

  Angle(AngleTag b, Jet<T> off) : base(b), offset(std::move(off)) {
    if (offset[0] != T(0))
      throw UnsupportedSeedError(
          "angle offset must have zero constant term; fold the base point "
          "into the symbolic tag (supported base points: 0, pi)");
  }

  int order() const { return offset.order(); }
};

template <class T>
Angle<T> pi_plus(Jet<T> offset) {
  return Angle<T>(AngleTag::Pi, std::move(offset));
}

template <class T>
Angle<T> zero_plus(Jet<T> offset) {
  return Angle<T>(AngleTag::Zero, std::move(offset));
}

template <class T>
struct SinCosJets {
  Jet<T> sin;
  Jet<T> cos;
};

namespace detail {

// Joint recurrence s' = a'·c, c' = -a'·s from exact seed values; the
// constant term of `a` is not consulted.
template <class T>
SinCosJets<T> sincos_seeded(T s0, T c0, const Jet<T>& a) {
  const int k = a.order();
  SinCosJets<T> r{Jet<T>(k), Jet<T>(k)};
  r.sin[0] = std::move(s0);
  r.cos[0] = std::move(c0);
  for (int i = 1; i <= k; ++i) {
    T acc_s{};
    T acc_c{};
    for (int j = 1; j <= i; ++j) {
      acc_s += T(j) * a[j] * r.cos[i - j];
      acc_c += T(j) * a[j] * r.sin[i - j];
    }
    r.sin[i] = acc_s / T(i);
    r.cos[i] = -acc_c / T(i);
  }
  return r;
}

}  // namespace detail

/// Jets of sin(v/2) and cos(v/2). Exact seeds: sin(pi/2) = 1, cos(pi/2) = 0.
template <class T>
SinCosJets<T> trig_half(const Angle<T>& v) {
  const bool at_pi = v.base == AngleTag::Pi;
  return detail::sincos_seeded(at_pi ? T(1) : T(0), at_pi ? T(0) : T(1),
                               scale(v.offset, T(1) / T(2)));
}

/// Real-mode overload with numerically evaluated seeds; accepts any v0.
inline SinCosJets<double> trig_half(const Jet<double>& v) {
  const double half = 0.5 * v[0];
  return detail::sincos_seeded(std::sin(half), std::cos(half), scale(v, 0.5));
}

/// Jets of sin(v) and cos(v) on the full angle (sin vanishes at both base
/// points; cos seeds to +/-1).
template <class T>
SinCosJets<T> trig_full(const Angle<T>& v) {
  const bool at_pi = v.base == AngleTag::Pi;
  return detail::sincos_seeded(T(0), at_pi ? T(-1) : T(1), v.offset);
}

}  // namespace novlab
