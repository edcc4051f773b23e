#pragma once

#include <Eigen/Dense>
#include <complex>
#include <initializer_list>
#include <vector>

namespace thetadiv {

/// Point of the Siegel upper half space: a symmetric complex g x g matrix
/// with positive definite imaginary part. Symmetry must hold exactly (the
/// matrix is assembled from one value per unordered index pair); the smallest
/// eigenvalue of Im(tau) is validated and cached on construction.
///
/// No fundamental-domain reduction is performed anywhere: callers should
/// supply reasonably reduced matrices or truncation radii will grow.
class PeriodMatrix {
 public:
  explicit PeriodMatrix(const Eigen::MatrixXcd& tau);

  /// Assemble from the upper triangle, row-major (j <= k), mirrored exactly.
  static PeriodMatrix from_upper(int g, const std::vector<std::complex<double>>& upper);
  /// diag(t1, ..., tg).
  static PeriodMatrix diagonal(std::initializer_list<std::complex<double>> ts);
  static PeriodMatrix diagonal(const std::vector<std::complex<double>>& ts);

  int genus() const { return (int)tau_.rows(); }
  const Eigen::MatrixXcd& tau() const { return tau_; }
  /// Smallest eigenvalue of Im(tau); strictly positive.
  double y_min() const { return y_min_; }

  /// tau + h*(E_jk + E_kj) for j != k, tau + h*E_jj for j == k (0-based).
  /// Throws InvalidPeriodMatrix if the result leaves the Siegel space.
  PeriodMatrix shifted(int j, int k, std::complex<double> h) const;

 private:
  Eigen::MatrixXcd tau_;
  double y_min_;
};

/// Direct sum tau1 (+) tau2: the period matrix of a product ppav.
PeriodMatrix product_tau(const PeriodMatrix& a, const PeriodMatrix& b);

}  // namespace thetadiv
