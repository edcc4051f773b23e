#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "thetadiv/errors.hpp"
#include "thetadiv/eval.hpp"
#include "thetadiv/rng.hpp"

using namespace thetadiv;
using cd = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr cd kI{0.0, 1.0};

// Independent reference evaluator: plain lattice sum over the box
// m in [-radius, radius]^g with optional first/second derivative factors.
// Shares no code with the library kernel.
cd brute_theta(const Eigen::MatrixXcd& tau, const Eigen::VectorXcd& z,
               const Characteristic& chi, int radius, int dj = -1, int dk = -1) {
  int g = (int)tau.rows();
  std::vector<int> m(g, -radius);
  cd sum = 0;
  while (true) {
    cd quad = 0, lin = 0;
    for (int a = 0; a < g; ++a) {
      double pa = m[a] + 0.5 * chi.eps[a];
      for (int b = 0; b < g; ++b) quad += pa * (m[b] + 0.5 * chi.eps[b]) * tau(a, b);
      lin += pa * (z(a) + 0.5 * chi.delta[a]);
    }
    cd term = std::exp(kI * kPi * (quad + 2.0 * lin));
    if (dj >= 0) term *= 2.0 * kPi * kI * (m[dj] + 0.5 * chi.eps[dj]);
    if (dk >= 0) term *= 2.0 * kPi * kI * (m[dk] + 0.5 * chi.eps[dk]);
    sum += term;
    int a = 0;
    for (; a < g; ++a) {
      if (++m[a] <= radius) break;
      m[a] = -radius;
    }
    if (a == g) break;
  }
  return sum;
}

// Sum of |term| * (2 pi ||p||)^order over R < ||m + eps/2||_inf <= R + margin:
// the brute-force witness that the certified radius really bounds the tail.
double brute_tail(const Eigen::MatrixXcd& tau, const Eigen::VectorXcd& z,
                  const Characteristic& chi, int order, int R, int margin = 20) {
  int g = (int)tau.rows();
  int big = R + margin;
  std::vector<int> m(g, -big - 1);
  double sum = 0;
  while (true) {
    double inf_norm = 0, two_norm = 0;
    for (int a = 0; a < g; ++a) {
      double pa = m[a] + 0.5 * chi.eps[a];
      inf_norm = std::max(inf_norm, std::abs(pa));
      two_norm += pa * pa;
    }
    if (inf_norm > R && inf_norm <= big) {
      cd quad = 0, lin = 0;
      for (int a = 0; a < g; ++a) {
        double pa = m[a] + 0.5 * chi.eps[a];
        for (int b = 0; b < g; ++b) quad += pa * (m[b] + 0.5 * chi.eps[b]) * tau(a, b);
        lin += pa * (z(a) + 0.5 * chi.delta[a]);
      }
      sum += std::abs(std::exp(kI * kPi * (quad + 2.0 * lin))) *
             std::pow(2.0 * kPi * std::sqrt(two_norm), order);
    }
    int a = 0;
    for (; a < g; ++a) {
      if (++m[a] <= big + 1) break;
      m[a] = -big - 1;
    }
    if (a == g) break;
  }
  return sum;
}

PeriodMatrix random_period_matrix(Rng& rng, int g) {
  Eigen::MatrixXcd t(g, g);
  for (int j = 0; j < g; ++j)
    for (int k = j; k < g; ++k) {
      double re = rng.real(-0.4, 0.4);
      double im = j == k ? rng.real(0.9, 2.0) : rng.real(-0.15, 0.15);
      t(j, k) = {re, im};
      t(k, j) = t(j, k);
    }
  return PeriodMatrix(t);
}

Eigen::VectorXcd random_point(Rng& rng, int g, double amp = 0.4) {
  Eigen::VectorXcd z(g);
  for (int j = 0; j < g; ++j) z(j) = {rng.real(-amp, amp), rng.real(-amp, amp)};
  return z;
}

Characteristic random_char(Rng& rng, int g) {
  std::vector<uint8_t> e(g), d(g);
  for (int j = 0; j < g; ++j) {
    e[j] = (uint8_t)rng.range(0, 1);
    d[j] = (uint8_t)rng.range(0, 1);
  }
  return Characteristic(e, d);
}

const PeriodMatrix kTauI = PeriodMatrix::diagonal({cd(0, 1)});

}  // namespace

TEST_CASE("truncation radius certifies the brute-force tail") {
  Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(1);
  Characteristic chi0 = Characteristic::zero(1);

  int R = truncation_radius(kTauI, z0, chi0, 0, 1e-12);
  CHECK(R <= 6);
  CHECK(brute_tail(kTauI.tau(), z0, chi0, 0, R) <= 1e-12);

  // loose tolerance forces the minimal radius
  CHECK(truncation_radius(kTauI, z0, chi0, 0, 1.0) == 1);

  // g = 2, second derivatives
  PeriodMatrix tau2 = PeriodMatrix::diagonal({cd(0, 1), cd(0, 1)});
  Eigen::VectorXcd z2 = Eigen::VectorXcd::Zero(2);
  Characteristic chi2 = Characteristic::zero(2);
  int R2 = truncation_radius(tau2, z2, chi2, 2, 1e-10);
  CHECK(R2 <= 8);
  CHECK(brute_tail(tau2.tau(), z2, chi2, 2, R2, 12) <= 1e-10);

  // a certified radius also bounds the tail at a shifted point
  Rng rng(5);
  Eigen::VectorXcd zr = random_point(rng, 2);
  int R3 = truncation_radius(tau2, zr, chi2, 1, 1e-11);
  CHECK(brute_tail(tau2.tau(), zr, chi2, 1, R3, 12) <= 1e-11);
}

TEST_CASE("precision cap raises PrecisionUnreachable") {
  Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(1);
  CHECK_THROWS_AS(truncation_radius(kTauI, z0, Characteristic::zero(1), 0, 1e-300, 3),
                  PrecisionUnreachable);
}

TEST_CASE("value at tau = i matches the classical constant") {
  auto v = theta_value(kTauI, Eigen::VectorXcd::Zero(1), Characteristic::zero(1), {1e-13, 64});
  CHECK(std::abs(v - cd(1.086434811213308, 0)) < 1e-12);  // pi^{1/4} / Gamma(3/4)
  // against the independent radius-30 lattice sum
  cd ref = brute_theta(kTauI.tau(), Eigen::VectorXcd::Zero(1), Characteristic::zero(1), 30);
  CHECK(std::abs(v - ref) < 1e-13);
}

TEST_CASE("jet matches the brute-force series at random points") {
  Rng rng(101);
  for (int g = 1; g <= 2; ++g) {
    for (int trial = 0; trial < 6; ++trial) {
      PeriodMatrix tau = random_period_matrix(rng, g);
      Eigen::VectorXcd z = random_point(rng, g);
      Characteristic chi = random_char(rng, g);
      ThetaJet jet = theta_jet(tau, z, chi, {1e-12, 64});
      int radius = 18;
      CHECK(std::abs(jet.value - brute_theta(tau.tau(), z, chi, radius)) < 2e-12);
      for (int j = 0; j < g; ++j)
        CHECK(std::abs(jet.grad(j) - brute_theta(tau.tau(), z, chi, radius, j)) < 2e-12);
      for (int j = 0; j < g; ++j)
        for (int k = j; k < g; ++k)
          CHECK(std::abs(jet.hess(j, k) - brute_theta(tau.tau(), z, chi, radius, j, k)) <
                2e-12);
    }
  }
}

TEST_CASE("odd constants vanish, even gradients vanish at z = 0") {
  Rng rng(102);
  for (int g = 1; g <= 3; ++g) {
    PeriodMatrix tau = random_period_matrix(rng, g);
    Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(g);
    for (auto& chi : enumerate_characteristics(g, Parity::Odd))
      CHECK(std::abs(theta_value(tau, z0, chi, {1e-12, 64})) <= 1e-12);
    for (auto& chi : enumerate_characteristics(g, Parity::Even))
      CHECK(theta_jet(tau, z0, chi, {1e-12, 64}).grad.norm() <= 2e-12);
  }
}

TEST_CASE("factorization over block-diagonal tau") {
  Rng rng(103);
  EvalConfig cfg{1e-12, 64};
  for (int trial = 0; trial < 8; ++trial) {
    int g2 = 1 + (int)rng.range(0, 1);
    PeriodMatrix t1 = random_period_matrix(rng, 1);
    PeriodMatrix t2 = random_period_matrix(rng, g2);
    PeriodMatrix prod = product_tau(t1, t2);
    Eigen::VectorXcd z = random_point(rng, 1 + g2);
    Characteristic chi = random_char(rng, 1 + g2);
    Characteristic chi1(std::vector<uint8_t>{chi.eps[0]}, std::vector<uint8_t>{chi.delta[0]});
    Characteristic chi2(std::vector<uint8_t>(chi.eps.begin() + 1, chi.eps.end()),
                        std::vector<uint8_t>(chi.delta.begin() + 1, chi.delta.end()));
    cd whole = theta_value(prod, z, chi, cfg);
    cd split = theta_value(t1, z.head(1), chi1, cfg) * theta_value(t2, z.tail(g2), chi2, cfg);
    CHECK(std::abs(whole - split) <= 3e-12);
  }
}

TEST_CASE("heat equation residual is small") {
  EvalConfig cfg{1e-10, 64};
  Eigen::VectorXcd z1(1);
  z1(0) = cd(0.3, 0.1);
  CHECK(heat_residual(kTauI, z1, Characteristic::zero(1), 0, 0, 1e-4, cfg) < 1e-6);

  PeriodMatrix tau2 = PeriodMatrix::diagonal({cd(0, 1), cd(0, 2)});
  Eigen::VectorXcd z2 = Eigen::VectorXcd::Zero(2);
  Characteristic even({1, 0}, {0, 1});
  REQUIRE(even.is_even());
  CHECK(heat_residual(tau2, z2, even, 0, 0, 1e-4, cfg) < 1e-6);
  CHECK(heat_residual(tau2, z2, even, 0, 1, 1e-4, cfg) < 1e-6);
}

TEST_CASE("heat residual decays quadratically in the step") {
  // large enough steps that the O(h^2) term dominates truncation noise
  EvalConfig cfg{1e-13, 64};
  Eigen::VectorXcd z(1);
  z(0) = cd(0.2, 0.1);
  double r1 = heat_residual(kTauI, z, Characteristic::zero(1), 0, 0, 4e-2, cfg);
  double r2 = heat_residual(kTauI, z, Characteristic::zero(1), 0, 0, 2e-2, cfg);
  CHECK(r1 / r2 == doctest::Approx(4.0).epsilon(0.25));
}

TEST_CASE("stepping outside the Siegel space is rejected") {
  // a real step never moves Im(tau); an imaginary one can push it indefinite
  CHECK_THROWS_AS(kTauI.shifted(0, 0, cd(0, -2)), InvalidPeriodMatrix);
  CHECK_NOTHROW(kTauI.shifted(0, 0, cd(2, 0)));
}

TEST_CASE("parity defect stays below twice the tolerance") {
  Rng rng(104);
  for (int i = 0; i < 100; ++i) {
    int g = 1 + i % 3;
    PeriodMatrix tau = random_period_matrix(rng, g);
    double defect = parity_defect(tau, random_point(rng, g), random_char(rng, g), {1e-12, 64});
    CHECK(defect < 2e-12);
  }
}

TEST_CASE("jet derivatives agree with finite differences in z") {
  Rng rng(105);
  EvalConfig cfg{1e-13, 64};
  for (int g = 1; g <= 3; ++g) {
    for (int trial = 0; trial < 20; ++trial) {
      PeriodMatrix tau = random_period_matrix(rng, g);
      Eigen::VectorXcd z = random_point(rng, g, 0.25);
      Characteristic chi = random_char(rng, g);
      ThetaJet jet = theta_jet(tau, z, chi, cfg);
      double h = 1e-3;
      int j = (int)rng.range(0, g - 1);
      int k = (int)rng.range(0, g - 1);

      Eigen::VectorXcd zp = z, zm = z;
      zp(j) += h;
      zm(j) -= h;
      cd grad_fd = (theta_value(tau, zp, chi, cfg) - theta_value(tau, zm, chi, cfg)) / (2 * h);
      CHECK(std::abs(grad_fd - jet.grad(j)) < 1e-4);

      cd hess_fd;
      if (j == k) {
        hess_fd = (theta_value(tau, zp, chi, cfg) - 2.0 * jet.value +
                   theta_value(tau, zm, chi, cfg)) /
                  (h * h);
      } else {
        Eigen::VectorXcd zpp = z, zpm = z, zmp = z, zmm = z;
        zpp(j) += h; zpp(k) += h;
        zpm(j) += h; zpm(k) -= h;
        zmp(j) -= h; zmp(k) += h;
        zmm(j) -= h; zmm(k) -= h;
        hess_fd = (theta_value(tau, zpp, chi, cfg) - theta_value(tau, zpm, chi, cfg) -
                   theta_value(tau, zmp, chi, cfg) + theta_value(tau, zmm, chi, cfg)) /
                  (4 * h * h);
      }
      CHECK(std::abs(hess_fd - jet.hess(j, k)) < 1e-2);
    }
  }
}

TEST_CASE("shape mismatches are rejected") {
  Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(2);
  CHECK_THROWS_AS(theta_value(kTauI, z0, Characteristic::zero(1), {}), DimensionMismatch);
  CHECK_THROWS_AS(theta_value(kTauI, Eigen::VectorXcd::Zero(1), Characteristic::zero(2), {}),
                  DimensionMismatch);
  Eigen::MatrixXcd bad(1, 1);
  bad(0, 0) = cd(0, -1);
  CHECK_THROWS_AS(PeriodMatrix{bad}, InvalidPeriodMatrix);
  Eigen::MatrixXcd asym(2, 2);
  asym << cd(0, 1), cd(0.1, 0), cd(0.2, 0), cd(0, 1);
  CHECK_THROWS_AS(PeriodMatrix{asym}, InvalidPeriodMatrix);
}
