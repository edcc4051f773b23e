#pragma once

#include <Eigen/Dense>
#include <complex>

#include "thetadiv/characteristic.hpp"
#include "thetadiv/period_matrix.hpp"

namespace thetadiv {

struct EvalConfig {
  /// Target absolute truncation error per jet entry.
  double tol = 1e-12;
  /// Safety cap on the lattice box radius.
  int max_radius = 64;
};

/// Value, z-gradient and z-Hessian of theta[eps,delta](tau, .) at one point.
/// trunc_bound is the Gaussian tail bound that was actually enforced for
/// every entry (<= the requested tolerance), not a heuristic.
struct ThetaJet {
  std::complex<double> value;
  Eigen::VectorXcd grad;
  Eigen::MatrixXcd hess;  // symmetric by construction
  double trunc_bound = 0;
};

/// Smallest box radius R such that the sum of |term| (times the polynomial
/// factor |2 pi (m+eps/2)|^order) over all lattice points with
/// ||m+eps/2||_inf > R is certified <= tol. The certificate uses the decay
/// exp(-pi y_min ||p||^2 + 2 pi ||Im z|| ||p||) summed over infinity-norm
/// shells. Throws PrecisionUnreachable if no R <= max_radius works.
int truncation_radius(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                      const Characteristic& chi, int order, double tol,
                      int max_radius = 64);

ThetaJet theta_jet(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                   const Characteristic& chi, const EvalConfig& cfg = {});

/// Value only; cheaper than theta_jet (order-0 truncation radius).
std::complex<double> theta_value(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                                 const Characteristic& chi, const EvalConfig& cfg = {});

/// |d^2 theta / dz_j dz_k  -  2 pi i (1+delta_jk) * (central difference of
/// theta in the tau_{jk} direction with step h)|. Indices are 0-based; for
/// j != k the step perturbs both symmetric entries, matching the convention
/// in which tau_{jk} (j<k) is a single coordinate on the Siegel space.
double heat_residual(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                     const Characteristic& chi, int j, int k, double h,
                     const EvalConfig& cfg = {});

/// |theta(tau,-z) - (-1)^{parity} theta(tau,z)|; at most 2*cfg.tol.
double parity_defect(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                     const Characteristic& chi, const EvalConfig& cfg = {});

}  // namespace thetadiv
