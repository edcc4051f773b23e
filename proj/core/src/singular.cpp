#include "thetadiv/singular.hpp"

#include <cmath>

#include "thetadiv/errors.hpp"
#include "thetadiv/rng.hpp"

namespace thetadiv {

Eigen::VectorXcd two_torsion_point(const PeriodMatrix& tau, const Characteristic& chi) {
  if (chi.genus() != tau.genus()) throw DimensionMismatch("two_torsion_point: genus mismatch");
  int g = tau.genus();
  Eigen::VectorXcd z = Eigen::VectorXcd::Zero(g);
  for (int j = 0; j < g; ++j) {
    for (int k = 0; k < g; ++k)
      if (chi.eps[k]) z(j) += tau.tau()(j, k);
    z(j) += (double)chi.delta[j];
    z(j) *= 0.5;
  }
  return z;
}

SingCandidate two_torsion_candidate(const PeriodMatrix& tau, const Characteristic& chi) {
  SingCandidate c{tau, two_torsion_point(tau, chi), Provenance::TwoTorsion, chi, std::nullopt};
  return c;
}

SingCandidate product_singular_point(const PeriodMatrix& tau1, const PeriodMatrix& tau2,
                                     const Eigen::VectorXcd& z2, const EvalConfig& cfg,
                                     double on_theta_tol) {
  if (tau1.genus() != 1)
    throw DimensionMismatch("product_singular_point: first factor must have genus 1");
  if (z2.size() != tau2.genus())
    throw DimensionMismatch("product_singular_point: z2 size mismatch");

  std::complex<double> v = theta_value(tau2, z2, Characteristic::zero(tau2.genus()), cfg);
  if (std::abs(v) > on_theta_tol)
    throw NotOnTheta("product_singular_point: |theta(tau2, z2)| = " + std::to_string(std::abs(v)));

  PeriodMatrix tau = product_tau(tau1, tau2);
  Eigen::VectorXcd z(tau.genus());
  z(0) = 0.5 * (1.0 + tau1.tau()(0, 0));  // the unique genus-1 theta zero
  z.tail(tau2.genus()) = z2;

  SingCandidate c{tau, z, Provenance::Product, std::nullopt,
                  std::make_pair(1, tau2.genus())};
  return c;
}

SingReport verify_singular(const SingCandidate& c, const EvalConfig& cfg,
                           double sing_tol, double rank_tol) {
  const int g = c.tau.genus();
  ThetaJet jet = theta_jet(c.tau, c.z, Characteristic::zero(g), cfg);

  SingReport r;
  r.sing_tol = sing_tol;
  r.rank_tol = rank_tol;
  r.value_norm = std::abs(jet.value);
  r.grad_norm = jet.grad.norm();

  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(jet.hess);
  r.hess_singular_values.assign(svd.singularValues().data(),
                                svd.singularValues().data() + g);
  double top = r.hess_singular_values.empty() ? 0.0 : r.hess_singular_values[0];
  double cut = rank_tol * std::max(1.0, top);
  for (double s : r.hess_singular_values)
    if (s > cut) ++r.numeric_rank;

  r.singular = r.value_norm <= sing_tol && r.grad_norm <= sing_tol;
  r.in_snull = c.provenance == Provenance::TwoTorsion && c.two_torsion_char &&
               c.two_torsion_char->is_even() && r.value_norm <= sing_tol;
  r.in_sdec = c.provenance == Provenance::Product;
  r.hess_degenerate = r.numeric_rank < g;
  return r;
}

namespace {

struct NewtonOutcome {
  bool converged = false;
  bool left_space = false;
  std::complex<double> root;
};

NewtonOutcome newton_attempt(const Characteristic& chi, const PeriodMatrix& tau0,
                             int j, int k, std::complex<double> t0,
                             const NewtonOptions& opt) {
  const Eigen::VectorXcd z0 = Eigen::VectorXcd::Zero(tau0.genus());
  EvalConfig cfg{opt.target * 1e-2, 64};
  auto f = [&](std::complex<double> t) {
    return theta_value(tau0.shifted(j, k, t), z0, chi, cfg);
  };

  NewtonOutcome out;
  std::complex<double> t = t0;
  try {
    for (int it = 0; it < opt.max_iter; ++it) {
      std::complex<double> ft = f(t);
      if (std::abs(ft) <= opt.target) {
        out.converged = true;
        out.root = t;
        return out;
      }
      std::complex<double> fp = (f(t + opt.fd_step) - f(t - opt.fd_step)) / (2.0 * opt.fd_step);
      if (std::abs(fp) < 1e-300) return out;  // flat spot, restart
      std::complex<double> step = ft / fp;
      if (std::abs(step) > 1.0) step *= 1.0 / std::abs(step);  // damp wild steps
      t -= step;
    }
  } catch (const InvalidPeriodMatrix&) {
    out.left_space = true;
  }
  return out;
}

}  // namespace

PeriodMatrix thetanull_path(const Characteristic& even_chi, const PeriodMatrix& tau_start,
                            int j, int k, const NewtonOptions& opt) {
  if (!even_chi.is_even()) throw Error("thetanull_path: characteristic must be even");
  if (even_chi.genus() != tau_start.genus())
    throw DimensionMismatch("thetanull_path: genus mismatch");
  const int g = tau_start.genus();
  if (j < 0 || j >= g || k < 0 || k >= g)
    throw DimensionMismatch("thetanull_path: entry out of range");

  Rng rng(opt.seed);
  int left_space_count = 0;
  for (int attempt = 0; attempt <= opt.restarts; ++attempt) {
    int jj = j, kk = k;
    if (attempt > opt.restarts / 2) {  // roam over other entries
      jj = (int)rng.range(0, g - 1);
      kk = (int)rng.range(0, g - 1);
    }
    std::complex<double> t0 =
        attempt == 0 ? std::complex<double>(0.3, 0.1)
                     : std::complex<double>(rng.real(-0.6, 0.6), rng.real(-0.3, 0.3));
    NewtonOutcome out = newton_attempt(even_chi, tau_start, jj, kk, t0, opt);
    if (out.converged) return tau_start.shifted(jj, kk, out.root);
    if (out.left_space) ++left_space_count;
  }
  if (left_space_count == opt.restarts + 1)
    throw LeftSiegelSpace("thetanull_path: every attempt left the Siegel space");
  throw NoConvergence("thetanull_path: no root found after restarts");
}

}  // namespace thetadiv
