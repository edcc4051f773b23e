#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "thetadiv/eval.hpp"

namespace thetadiv {

enum class Provenance { TwoTorsion, Product, Manual };

/// A (tau, z) pair proposed as a singular point of the theta divisor of tau,
/// together with the construction that produced it.
struct SingCandidate {
  PeriodMatrix tau;
  Eigen::VectorXcd z;
  Provenance provenance = Provenance::Manual;
  /// Set for TwoTorsion candidates; then z = (tau*eps + delta)/2 exactly.
  std::optional<Characteristic> two_torsion_char;
  /// Set for Product candidates: the (g1, g2) split.
  std::optional<std::pair<int, int>> product_split;
};

/// Numeric verdict on a candidate. numeric_rank counts Hessian singular
/// values above rank_tol * max(1, largest); hess_degenerate means < g.
struct SingReport {
  double value_norm = 0;
  double grad_norm = 0;
  std::vector<double> hess_singular_values;  // descending
  int numeric_rank = 0;
  bool in_snull = false;
  bool in_sdec = false;
  bool hess_degenerate = false;
  bool singular = false;
  double sing_tol = 0;
  double rank_tol = 0;
};

/// (tau*eps + delta)/2, componentwise.
Eigen::VectorXcd two_torsion_point(const PeriodMatrix& tau, const Characteristic& chi);

SingCandidate two_torsion_candidate(const PeriodMatrix& tau, const Characteristic& chi);

/// Pairs the unique theta zero (1+tau1)/2 of a genus-1 factor with a point z2
/// on the theta divisor of tau2; the result is singular on the product.
/// Throws NotOnTheta if |theta(tau2, z2)| > on_theta_tol. A certified z2 with
/// no search at all: any odd two-torsion point of tau2 (odd theta constants
/// vanish identically), or (1+tau2)/2 when g2 = 1.
SingCandidate product_singular_point(const PeriodMatrix& tau1, const PeriodMatrix& tau2,
                                     const Eigen::VectorXcd& z2, const EvalConfig& cfg = {},
                                     double on_theta_tol = 1e-10);

/// Evaluates the jet of theta[0,0] at the candidate and classifies it.
SingReport verify_singular(const SingCandidate& c, const EvalConfig& cfg = {},
                           double sing_tol = 1e-8, double rank_tol = 1e-6);

struct NewtonOptions {
  double target = 1e-13;  // |theta constant| at the returned matrix
  int max_iter = 60;
  int restarts = 16;
  double fd_step = 1e-6;
  uint64_t seed = 1;
};

/// Deforms one entry (and its symmetric partner) of tau_start until the theta
/// constant of the given even characteristic vanishes: one-variable Newton on
/// the holomorphic map t -> theta[chi](tau + t*E_jk, 0), finite-difference
/// derivative, random restarts (eventually roaming over other entries).
/// Returns a certified point of the theta-null divisor.
PeriodMatrix thetanull_path(const Characteristic& even_chi, const PeriodMatrix& tau_start,
                            int j, int k, const NewtonOptions& opt = {});

}  // namespace thetadiv
