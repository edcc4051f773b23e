#include <benchmark/benchmark.h>

#include "thetadiv/eval.hpp"
#include "thetadiv/rng.hpp"
#include "thetadiv/singular.hpp"

using namespace thetadiv;
using cd = std::complex<double>;

namespace {

PeriodMatrix bench_tau(int g) {
  Rng rng(99);
  Eigen::MatrixXcd t(g, g);
  for (int j = 0; j < g; ++j)
    for (int k = j; k < g; ++k) {
      double re = rng.real(-0.3, 0.3);
      double im = j == k ? rng.real(1.0, 1.6) : rng.real(-0.1, 0.1);
      t(j, k) = {re, im};
      t(k, j) = t(j, k);
    }
  return PeriodMatrix(t);
}

Eigen::VectorXcd bench_z(int g) {
  Rng rng(100);
  Eigen::VectorXcd z(g);
  for (int j = 0; j < g; ++j) z(j) = {rng.real(-0.3, 0.3), rng.real(-0.3, 0.3)};
  return z;
}

}  // namespace

static void BM_ThetaJet(benchmark::State& state) {
  int g = (int)state.range(0);
  PeriodMatrix tau = bench_tau(g);
  Eigen::VectorXcd z = bench_z(g);
  Characteristic chi = Characteristic::zero(g);
  EvalConfig cfg{1e-10, 64};
  for (auto _ : state) {
    ThetaJet jet = theta_jet(tau, z, chi, cfg);
    benchmark::DoNotOptimize(jet.value);
  }
}
BENCHMARK(BM_ThetaJet)->DenseRange(1, 4);

static void BM_ThetaValue(benchmark::State& state) {
  int g = (int)state.range(0);
  PeriodMatrix tau = bench_tau(g);
  Eigen::VectorXcd z = bench_z(g);
  Characteristic chi = Characteristic::zero(g);
  EvalConfig cfg{1e-10, 64};
  for (auto _ : state) {
    auto v = theta_value(tau, z, chi, cfg);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ThetaValue)->DenseRange(1, 4);

static void BM_TruncationRadius(benchmark::State& state) {
  int g = (int)state.range(0);
  PeriodMatrix tau = bench_tau(g);
  Eigen::VectorXcd z = bench_z(g);
  Characteristic chi = Characteristic::zero(g);
  for (auto _ : state) {
    int r = truncation_radius(tau, z, chi, 2, 1e-10);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TruncationRadius)->DenseRange(1, 4);

static void BM_VerifySingular(benchmark::State& state) {
  PeriodMatrix e1 = PeriodMatrix::diagonal({cd(0, 1)});
  PeriodMatrix t2 = bench_tau(2);
  Characteristic odd = enumerate_characteristics(2, Parity::Odd)[0];
  SingCandidate c = product_singular_point(e1, t2, two_torsion_point(t2, odd), {1e-12, 64});
  for (auto _ : state) {
    SingReport rep = verify_singular(c, {1e-12, 64}, 1e-8);
    benchmark::DoNotOptimize(rep.numeric_rank);
  }
}
BENCHMARK(BM_VerifySingular);

static void BM_ThetanullPath(benchmark::State& state) {
  Characteristic chi({1, 1}, {0, 0});
  PeriodMatrix start = PeriodMatrix::diagonal({cd(0, 1), cd(0, 1)});
  for (auto _ : state) {
    PeriodMatrix tstar = thetanull_path(chi, start, 0, 1);
    benchmark::DoNotOptimize(tstar.y_min());
  }
}
BENCHMARK(BM_ThetanullPath);

BENCHMARK_MAIN();
