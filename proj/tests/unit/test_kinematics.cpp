// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "novlab/kinematics.hpp"

using namespace novlab;

namespace {

Rational rat(long n, long d = 1) { return Rational(n, d); }

Jet<Rational> monomial_offset(int order, int degree, Rational coeff = Rational(1)) {
  Jet<Rational> j(order);
  j[degree] = coeff;
  return j;
}

// v = pi + s^m with unit q.
SingularPointConfig<Rational> config_m(Model model, int m, int order,
                                       Rational u0 = Rational(0)) {
  return SingularPointConfig<Rational>(
      model, pi_plus(monomial_offset(order, m)),
      Jet<Rational>::constant(order, 1), u0);
}

struct RandomConfigGen {
  std::mt19937 rng{987654321};
  std::uniform_int_distribution<int> num{-5, 5};
  std::uniform_int_distribution<int> den{1, 4};

  Rational coeff() { return Rational(num(rng), den(rng)); }

  Angle<Rational> angle(int order) {
    Jet<Rational> off(order);
    for (int i = 1; i <= order; ++i) off[i] = coeff();
    return pi_plus(std::move(off));
  }

  Jet<Rational> positive_jet(int order) {
    Jet<Rational> j(order);
    j[0] = Rational(1) + Rational(num(rng) + 6, den(rng));  // > 0
    for (int i = 1; i <= order; ++i) j[i] = coeff();
    return j;
  }
};

}  // namespace

TEST_CASE("u_Y jet at a transversal point") {
  const auto cfg = config_m(Model::Novikov, 1, 9);
  const Jet<Rational> uy = u_y_jet(cfg);
  CHECK(uy[0] == 0);
  CHECK(uy[1] == 0);
  CHECK(uy[2] == 0);
  CHECK(uy[3] == rat(-1, 8));
  CHECK(uy[5] == rat(1, 32));
  CHECK(vanishing_order(uy) == 3);
}

TEST_CASE("u_Y jet at a tangential point") {
  const auto cfg = config_m(Model::Novikov, 2, 12);
  const Jet<Rational> uy = u_y_jet(cfg);
  CHECK(vanishing_order(uy) == 6);
  CHECK(uy[6] == rat(-1, 8));
}

TEST_CASE("u_Y jet in Camassa-Holm mode") {
  const auto cfg = config_m(Model::CamassaHolm, 1, 9);
  const Jet<Rational> uy = u_y_jet(cfg);
  CHECK(vanishing_order(uy) == 1);
  CHECK(uy[1] == rat(-1, 2));
}

TEST_CASE("x_Y jet orders and leads") {
  const auto t2 = config_m(Model::Novikov, 1, 9);
  const Jet<Rational> xy2 = x_y_jet(t2);
  CHECK(vanishing_order(xy2) == 4);
  CHECK(xy2[4] == rat(1, 16));

  const auto t1 = config_m(Model::Novikov, 2, 12);
  const Jet<Rational> xy1 = x_y_jet(t1);
  CHECK(vanishing_order(xy1) == 8);
  CHECK(xy1[8] == rat(1, 16));
}

TEST_CASE("x_Y at a regular point is the unit Jacobian") {
  // v = 0: the kinematic product functions accept the regular base point.
  const Jet<Rational> xy = x_y_jet(Model::Novikov, zero_plus(Jet<Rational>(6)),
                                   Jet<Rational>::constant(6, 1));
  CHECK(xy == Jet<Rational>::constant(6, 1));
}

TEST_CASE("orders: transversal point reproduces 4/5") {
  const OrderReport<Rational> rep = orders(config_m(Model::Novikov, 1, 12));
  CHECK(rep.ord_u == 4);
  CHECK(rep.lead_u == rat(-1, 32));
  CHECK(rep.ord_x == 5);
  CHECK(rep.lead_x == rat(1, 80));
  CHECK(rep.exponent == rat(4, 5));
  // Claimed orders agree; the claimed u_Y4 and x_Y5 values do not.
  CHECK(rep.claims.at("ord_u") == 4);
  CHECK(rep.claims.at("ord_x") == 5);
  CHECK(rep.claims.at("u_Y4") == rat(1, 2));
  CHECK(rep.oracle.at("u_Y4") == rat(-3, 4));
  CHECK(rep.claims.at("x_Y5") == rat(-3, 2));
  CHECK(rep.oracle.at("x_Y5") == rat(3, 2));
  CHECK(rep.discrepancies.size() == 2);
}

TEST_CASE("orders: tangential point reports 7/9 against claimed 6/8") {
  const OrderReport<Rational> rep = orders(config_m(Model::Novikov, 2, 12));
  CHECK(rep.ord_u == 7);
  CHECK(rep.lead_u == rat(-1, 56));
  CHECK(rep.ord_x == 9);
  CHECK(rep.lead_x == rat(1, 144));
  CHECK(rep.exponent == rat(7, 9));
  CHECK(rep.claims.at("ord_u") == 6);
  CHECK(rep.claims.at("ord_x") == 8);
  // v_YY = 2 here, so the claimed closed forms evaluate to -30 and 576.
  CHECK(rep.claims.at("u_Y6") == rat(-30));
  CHECK(rep.claims.at("x_Y8") == rat(576));
  CHECK(rep.oracle.at("u_Y6") == 0);
  CHECK(rep.oracle.at("x_Y8") == 0);
  CHECK(rep.discrepancies.size() == 4);
}

TEST_CASE("orders: Camassa-Holm contrast is exactly 2/3") {
  const OrderReport<Rational> rep = orders(config_m(Model::CamassaHolm, 1, 8));
  CHECK(rep.ord_u == 2);
  CHECK(rep.lead_u == rat(-1, 4));
  CHECK(rep.ord_x == 3);
  CHECK(rep.lead_x == rat(1, 12));
  CHECK(rep.exponent == rat(2, 3));
  CHECK(rep.claims.empty());
}

TEST_CASE("orders: truncation error when K is too small") {
  // v = pi + s^3 needs orders 10 and 13.
  CHECK_THROWS_AS(orders(config_m(Model::Novikov, 3, 8)), TruncationError);
}

TEST_CASE("order law sweep over the tangency degree m") {
  for (int m = 1; m <= 3; ++m) {
    const OrderReport<Rational> nov = orders(config_m(Model::Novikov, m, 14));
    CHECK(nov.ord_u == 3 * m + 1);
    CHECK(nov.ord_x == 4 * m + 1);
    const OrderReport<Rational> ch = orders(config_m(Model::CamassaHolm, m, 14));
    CHECK(ch.ord_u == m + 1);
    CHECK(ch.ord_x == 2 * m + 1);
  }
}

TEST_CASE("form equivalence: (1/2) q sin v cos^2(v/2) == q sh ch^3") {
  RandomConfigGen gen;
  for (int trial = 0; trial < 30; ++trial) {
    const Angle<Rational> v = gen.angle(10);
    const Jet<Rational> q = gen.positive_jet(10);
    const auto h = trig_half(v);
    const auto f = trig_full(v);
    const Jet<Rational> lhs = scale(q * f.sin * (h.cos * h.cos), rat(1, 2));
    const Jet<Rational> rhs = u_y_jet(Model::Novikov, v, q);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("scaling covariance in q") {
  const auto base = orders(config_m(Model::Novikov, 1, 12));
  SingularPointConfig<Rational> cfg = config_m(Model::Novikov, 1, 12);
  cfg.q = scale(cfg.q, rat(3, 2));
  const auto scaled = orders(cfg);
  CHECK(scaled.ord_u == base.ord_u);
  CHECK(scaled.ord_x == base.ord_x);
  CHECK(scaled.exponent == base.exponent);
  CHECK(scaled.lead_u == rat(3, 2) * base.lead_u);
  CHECK(scaled.lead_x == rat(3, 2) * base.lead_x);
}

TEST_CASE("q must stay positive and orders must match") {
  CHECK_THROWS_AS(SingularPointConfig<Rational>(
                      Model::Novikov, pi_plus(monomial_offset(8, 1)),
                      Jet<Rational>::constant(8, rat(-1))),
                  std::invalid_argument);
  CHECK_THROWS_AS(SingularPointConfig<Rational>(
                      Model::Novikov, pi_plus(monomial_offset(8, 1)),
                      Jet<Rational>::constant(6, 1)),
                  std::invalid_argument);
}

TEST_CASE("v_T jet values") {
  // Zero state: every term carries u or W.
  auto zero_cfg = config_m(Model::Novikov, 1, 8);
  CHECK(v_t_jet(zero_cfg).is_zero());

  // u = -1 constant at a flat v = pi point: v_T(0) = -u = 1.
  auto flat = SingularPointConfig<Rational>(Model::Novikov,
                                            pi_plus(Jet<Rational>(8)),
                                            Jet<Rational>::constant(8, 1), rat(-1));
  const Jet<Rational> vt = v_t_jet(flat);
  CHECK(vt[0] == 1);

  // Flat v = pi kills sin v, hence q_T entirely.
  flat.u0 = rat(7, 3);
  const Jet<Rational> qt = q_t_jet(flat);
  CHECK(qt[0] == 0);
  CHECK(qt.is_zero());
}

TEST_CASE("mixed orders at a tangential point with constant u") {
  auto cfg = config_m(Model::Novikov, 2, 12, rat(1));
  const MixedOrders<Rational> m = mixed_orders(cfg);
  REQUIRE(m.ord_du_y_dt.has_value());
  CHECK(*m.ord_du_y_dt >= 4);  // u_{Y^2 t} .. u_{Y^4 t} all vanish
  CHECK(*m.ord_du_y_dt == 4);
  CHECK(m.du_y_dt[4] == rat(3, 8));
}

TEST_CASE("mixed orders vanish identically on the zero state") {
  auto cfg = config_m(Model::Novikov, 2, 12, rat(0));
  const MixedOrders<Rational> m = mixed_orders(cfg);
  CHECK(!m.ord_du_y_dt.has_value());
  CHECK(!m.ord_dx_y_dt.has_value());
}

TEST_CASE("mixed orders at a transversal point with constant u") {
  auto cfg = config_m(Model::Novikov, 1, 12, rat(1));
  const MixedOrders<Rational> m = mixed_orders(cfg);
  REQUIRE(m.ord_dx_y_dt.has_value());
  CHECK(*m.ord_dx_y_dt == 3);
  CHECK(m.dx_y_dt[3] == rat(-1, 4));
}

TEST_CASE("synthetic curve evaluation and trust flags") {
  const auto cfg = config_m(Model::Novikov, 1, 12);
  const auto at_zero = synth_curve(cfg, {0.0});
  CHECK(at_zero[0].x == 0.0);
  CHECK(at_zero[0].u == 0.0);
  CHECK(at_zero[0].trusted);

  const auto at_tenth = synth_curve(cfg, {0.1});
  // x ~ s^5/80, u ~ -s^4/32 with sub-percent corrections at s = 0.1
  CHECK(at_tenth[0].x == doctest::Approx(1e-5 / 80.0).epsilon(0.005));
  CHECK(at_tenth[0].u == doctest::Approx(-1e-4 / 32.0).epsilon(0.02));

  const auto far = synth_curve(cfg, {2.5});
  CHECK(!far[0].trusted);
}

TEST_CASE("series parities follow the oracle orders") {
  // Tangential config: u_Y and x_Y are even in s, so both antiderivatives
  // are odd and s -> -s flips both offsets exactly.
  {
    const auto cfg = config_m(Model::Novikov, 2, 12);
    const Jet<Rational> us = antiderivative(u_y_jet(cfg), rat(0));
    const Jet<Rational> xs = antiderivative(x_y_jet(cfg), rat(0));
    for (int n = 0; n <= 12; n += 2) {
      CHECK(us[n] == 0);
      CHECK(xs[n] == 0);
    }
  }
  // Transversal config: u offsets are even (equal at +-s), x offsets odd.
  {
    const auto cfg = config_m(Model::Novikov, 1, 12);
    const Jet<Rational> us = antiderivative(u_y_jet(cfg), rat(0));
    const Jet<Rational> xs = antiderivative(x_y_jet(cfg), rat(0));
    for (int n = 1; n <= 12; n += 2) CHECK(us[n] == 0);
    for (int n = 0; n <= 12; n += 2) CHECK(xs[n] == 0);
  }
}
