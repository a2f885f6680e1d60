// Copyright 2026 The novlab Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "novlab/char_solver.hpp"
#include "novlab/green.hpp"
#include "novlab/jet.hpp"
#include "novlab/kinematics.hpp"

using namespace novlab;

namespace {

struct ConvInputs {
  std::vector<double> x, g, w;
  explicit ConvInputs(std::size_t n) : x(n), g(n), w(n) {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> jitter(0.01, 0.05);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    double pos = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      pos += jitter(rng);
      x[i] = pos;
      g[i] = val(rng);
      w[i] = 0.01;
    }
  }
};

void BM_conv_exp_scan(benchmark::State& state) {
  const ConvInputs in(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(conv_exp(in.x, in.g, in.w));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_conv_exp_scan)->Range(256, 16384)->Complexity(benchmark::oN);

void BM_conv_direct(benchmark::State& state) {
  const ConvInputs in(static_cast<std::size_t>(state.range(0)));
  const std::size_t n = in.x.size();
  std::vector<double> P(n);
  for (auto _ : state) {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < n; ++j)
        acc += 0.5 * std::exp(-std::abs(in.x[i] - in.x[j])) * in.g[j] * in.w[j];
      P[i] = acc;
    }
    benchmark::DoNotOptimize(P.data());
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_conv_direct)->Range(256, 2048)->Complexity(benchmark::oNSquared);

void BM_char_rhs(benchmark::State& state) {
  const GaussianProfile u0(-1.2, 0.0, 1.0);
  const CharState s = init_from_u0(u0, 20.0, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rhs(s));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_char_rhs)->Range(1024, 8192)->Complexity(benchmark::oN);

void BM_rational_jet_mul(benchmark::State& state) {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> num(-9, 9);
  Jet<Rational> a(12), b(12);
  for (int i = 0; i <= 12; ++i) {
    a[i] = Rational(num(rng), 7);
    b[i] = Rational(num(rng), 5);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(a * b);
  }
}
BENCHMARK(BM_rational_jet_mul);

void BM_orders_exact(benchmark::State& state) {
  Jet<Rational> off(12);
  off[1] = 1;
  const SingularPointConfig<Rational> cfg(Model::Novikov, pi_plus(off),
                                          Jet<Rational>::constant(12, 1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(orders(cfg));
  }
}
BENCHMARK(BM_orders_exact);

}  // namespace

BENCHMARK_MAIN();
