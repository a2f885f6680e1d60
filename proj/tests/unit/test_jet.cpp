// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "novlab/jet.hpp"

using namespace novlab;

namespace {

Jet<Rational> rjet(std::initializer_list<Rational> cs) {
  return Jet<Rational>::from_coeffs(std::vector<Rational>(cs));
}

Rational rat(long n, long d = 1) { return Rational(n, d); }

// Padded to a target order.
Jet<Rational> rjet_k(int order, std::initializer_list<Rational> cs) {
  Jet<Rational> j(order);
  int i = 0;
  for (const Rational& c : cs) j[i++] = c;
  return j;
}

struct RationalGen {
  std::mt19937 rng{20260809};
  std::uniform_int_distribution<int> num{-6, 6};
  std::uniform_int_distribution<int> den{1, 5};

  Rational coeff() { return Rational(num(rng), den(rng)); }

  Jet<Rational> jet(int order) {
    Jet<Rational> j(order);
    for (int i = 0; i <= order; ++i) j[i] = coeff();
    return j;
  }

  // Zero constant term, usable as an angle offset.
  Jet<Rational> offset(int order) {
    Jet<Rational> j = jet(order);
    j[0] = 0;
    return j;
  }
};

}  // namespace

TEST_CASE("componentwise add and scalar scale") {
  CHECK(rjet({1, 2}) + rjet({3, 4}) == rjet({4, 6}));
  CHECK(scale(rjet({1, 2, 3}), rat(-2)) == rjet({-2, -4, -6}));
  CHECK(-rjet({1, -2}) == rjet({-1, 2}));
}

TEST_CASE("cauchy product truncates at K") {
  // s * s = s^2 at K = 2
  CHECK(rjet({0, 1, 0}) * rjet({0, 1, 0}) == rjet({0, 0, 1}));
  // (1+s)(1-s) at K = 1 keeps only [1, 0]
  CHECK(rjet({1, 1}) * rjet({1, -1}) == rjet({1, 0}));
}

TEST_CASE("mismatched orders are a usage error") {
  CHECK_THROWS_AS(rjet({1, 2}) + rjet({1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(rjet({1, 2}) * rjet({1}), std::invalid_argument);
}

TEST_CASE("differentiate and antidifferentiate") {
  CHECK(derivative(rjet({0, 0, 0, 1})) == rjet({0, 0, 3, 0}));

  // antiderivative of -1/8 s^6 integrates to -1/56 s^7 exactly
  Jet<Rational> a(12);
  a[6] = rat(-1, 8);
  const Jet<Rational> ia = antiderivative(a, rat(0));
  CHECK(ia[7] == rat(-1, 56));
  for (int n = 0; n <= 12; ++n)
    if (n != 7) CHECK(ia[n] == 0);

  CHECK(antiderivative(Jet<Rational>(4), rat(5)) == rjet({5, 0, 0, 0, 0}));
}

TEST_CASE("differentiate after antidifferentiate zeroes the top coefficient") {
  RationalGen gen;
  for (int trial = 0; trial < 25; ++trial) {
    const Jet<Rational> a = gen.jet(7);
    Jet<Rational> expect = a;
    expect[7] = 0;
    CHECK(derivative(antiderivative(a, gen.coeff())) == expect);
  }
}

TEST_CASE("vanishing order") {
  CHECK(vanishing_order(rjet_k(8, {0, 0, 0, rat(-1, 8)})) == 3);
  CHECK(!vanishing_order(Jet<Rational>(5)).has_value());
  const Jet<double> noisy = Jet<double>::from_coeffs({1e-18, 0.0, 2.0});
  CHECK(vanishing_order(noisy, 1e-12) == 2);
  CHECK_THROWS_AS(vanishing_order(rjet({1}), 1e-12), std::invalid_argument);
}

TEST_CASE("half-angle jets at v = pi + s") {
  const auto t = trig_half(pi_plus(rjet_k(4, {0, 1})));
  // sin(v/2) = cos(s/2), cos(v/2) = -sin(s/2)
  CHECK(t.sin == rjet({1, 0, rat(-1, 8), 0, rat(1, 384)}));
  CHECK(t.cos == rjet({0, rat(-1, 2), 0, rat(1, 48), 0}));
}

TEST_CASE("half-angle jets at v = 0") {
  const auto t = trig_half(zero_plus(Jet<Rational>(3)));
  CHECK(t.sin == Jet<Rational>(3));
  CHECK(t.cos == Jet<Rational>::constant(3, 1));
}

TEST_CASE("half-angle jets at v = pi + s^2") {
  Jet<Rational> off(9);
  off[2] = 1;
  const auto t = trig_half(pi_plus(off));
  CHECK(t.cos == rjet({0, 0, rat(-1, 2), 0, 0, 0, rat(1, 48), 0, 0, 0}));
}

TEST_CASE("angle base points other than 0 and pi are rejected in exact mode") {
  CHECK_THROWS_AS(pi_plus(rjet({1, 1})), UnsupportedSeedError);
}

TEST_CASE("real-mode half angle seeds numerically") {
  Jet<double> v = Jet<double>::from_coeffs({1.3, 1.0, 0.0, 0.0, 0.0});
  const auto t = trig_half(v);
  CHECK(t.sin[0] == doctest::Approx(std::sin(0.65)).epsilon(1e-15));
  CHECK(t.cos[0] == doctest::Approx(std::cos(0.65)).epsilon(1e-15));
  // derivative of sin(v/2) is cos(v/2)/2 along the s direction
  CHECK(t.sin[1] == doctest::Approx(0.5 * std::cos(0.65)).epsilon(1e-14));
}

TEST_CASE("ring laws hold exactly on random rational jets") {
  RationalGen gen;
  for (int trial = 0; trial < 40; ++trial) {
    const Jet<Rational> a = gen.jet(6), b = gen.jet(6), c = gen.jet(6);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
  }
}

TEST_CASE("pythagoras: sh^2 + ch^2 == 1 exactly") {
  RationalGen gen;
  const Jet<Rational> one = Jet<Rational>::constant(8, 1);
  for (int trial = 0; trial < 25; ++trial) {
    const AngleTag base = trial % 2 == 0 ? AngleTag::Pi : AngleTag::Zero;
    const auto t = trig_half(Angle<Rational>(base, gen.offset(8)));
    CHECK(t.sin * t.sin + t.cos * t.cos == one);
  }
}

TEST_CASE("pythagoras within 1e-12 per coefficient in real mode") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> dist(-2.0, 2.0);
  for (int trial = 0; trial < 25; ++trial) {
    Jet<double> v(12);
    for (int i = 0; i <= 12; ++i) v[i] = dist(rng);
    const auto t = trig_half(v);
    const Jet<double> p = t.sin * t.sin + t.cos * t.cos;
    CHECK(std::abs(p[0] - 1.0) <= 1e-12);
    for (int i = 1; i <= 12; ++i) CHECK(std::abs(p[i]) <= 1e-12);
  }
}

TEST_CASE("double angle: 2 sh ch equals the full-angle sine jet") {
  RationalGen gen;
  for (int trial = 0; trial < 25; ++trial) {
    const AngleTag base = trial % 2 == 0 ? AngleTag::Pi : AngleTag::Zero;
    const Angle<Rational> v(base, gen.offset(8));
    const auto h = trig_half(v);
    const auto f = trig_full(v);
    CHECK(scale(h.sin * h.cos, rat(2)) == f.sin);
  }
}

TEST_CASE("evaluate uses Horner on the coefficients") {
  const Jet<double> p = Jet<double>::from_coeffs({1.0, -2.0, 3.0});
  CHECK(evaluate(p, 0.5) == doctest::Approx(1.0 - 1.0 + 0.75));
}
