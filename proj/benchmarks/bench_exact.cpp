#include <benchmark/benchmark.h>

#include "thetadiv/graded_class.hpp"
#include "thetadiv/pfaffian.hpp"
#include "thetadiv/prym.hpp"
#include "thetadiv/rng.hpp"

using namespace thetadiv;

static void BM_Pfaffian(benchmark::State& state) {
  int n = (int)state.range(0);
  Rng rng(7);
  SkewMatrix m = SkewMatrix::zero(n);
  for (int j = 0; j < n; ++j)
    for (int k = j + 1; k < n; ++k) m.set(j, k, Rational(rng.range(-5, 5), rng.range(1, 2)));
  for (auto _ : state) {
    Rational pf = pfaffian(m);
    benchmark::DoNotOptimize(pf);
  }
}
BENCHMARK(BM_Pfaffian)->Arg(4)->Arg(6)->Arg(8);

static void BM_RationalDet(benchmark::State& state) {
  int n = (int)state.range(0);
  Rng rng(8);
  RatMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rng.range(-9, 9), rng.range(1, 3));
  for (auto _ : state) {
    Rational d = m.det();
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_RationalDet)->Arg(4)->Arg(8);

static void BM_PfaffianQuadric(benchmark::State& state) {
  Rng rng(9);
  RatMatrix m(5, 6);
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 6; ++c) m.at(r, c) = Rational(rng.range(-9, 9), rng.range(1, 3));
  PetriMap mu{m};
  for (auto _ : state) {
    QuadraticForm q = pfaffian_quadric(mu);
    benchmark::DoNotOptimize(q.rank());
  }
}
BENCHMARK(BM_PfaffianQuadric);

static void BM_Rank4Check(benchmark::State& state) {
  for (auto _ : state) {
    Rank4Report rep = rank4_equivalence_check((int)state.range(0), 7);
    benchmark::DoNotOptimize(rep.counterexamples);
  }
}
BENCHMARK(BM_Rank4Check)->Arg(50)->Arg(200);

static void BM_ClassPipeline(benchmark::State& state) {
  int g = (int)state.range(0);
  for (auto _ : state) {
    BaseClass h = class_nonordinary(g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(BM_ClassPipeline)->Arg(4)->Arg(8)->Arg(12);

static void BM_PrymCertificates(benchmark::State& state) {
  for (auto _ : state) {
    auto a = antiramification_certificate();
    auto p = prym_pushforward();
    auto s = slope_certificate();
    auto t = taut_class_certificate();
    benchmark::DoNotOptimize(a.solved_c);
    benchmark::DoNotOptimize(p.degree_identity);
    benchmark::DoNotOptimize(s.moving_slope_bound);
    benchmark::DoNotOptimize(t.cover_degree);
  }
}
BENCHMARK(BM_PrymCertificates);

BENCHMARK_MAIN();
