#include "thetadiv/period_matrix.hpp"

#include "thetadiv/errors.hpp"

namespace thetadiv {

PeriodMatrix::PeriodMatrix(const Eigen::MatrixXcd& tau) : tau_(tau) {
  if (tau.rows() < 1 || tau.rows() != tau.cols())
    throw InvalidPeriodMatrix("period matrix must be square, g >= 1");
  for (int j = 0; j < tau.rows(); ++j)
    for (int k = j + 1; k < tau.cols(); ++k)
      if (tau(j, k) != tau(k, j))
        throw InvalidPeriodMatrix("period matrix must be exactly symmetric");
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tau_.imag());
  y_min_ = es.eigenvalues().minCoeff();
  if (!(y_min_ > 0))
    throw InvalidPeriodMatrix("Im(tau) is not positive definite");
}

PeriodMatrix PeriodMatrix::from_upper(int g, const std::vector<std::complex<double>>& upper) {
  if ((int)upper.size() != g * (g + 1) / 2)
    throw DimensionMismatch("from_upper: expected g(g+1)/2 entries");
  Eigen::MatrixXcd t(g, g);
  int i = 0;
  for (int j = 0; j < g; ++j)
    for (int k = j; k < g; ++k) {
      t(j, k) = upper[i];
      t(k, j) = upper[i];
      ++i;
    }
  return PeriodMatrix(t);
}

PeriodMatrix PeriodMatrix::diagonal(std::initializer_list<std::complex<double>> ts) {
  return diagonal(std::vector<std::complex<double>>(ts));
}

PeriodMatrix PeriodMatrix::diagonal(const std::vector<std::complex<double>>& ts) {
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(ts.size(), ts.size());
  for (size_t i = 0; i < ts.size(); ++i) t(i, i) = ts[i];
  return PeriodMatrix(t);
}

PeriodMatrix PeriodMatrix::shifted(int j, int k, std::complex<double> h) const {
  int g = genus();
  if (j < 0 || j >= g || k < 0 || k >= g)
    throw DimensionMismatch("shifted: index out of range");
  Eigen::MatrixXcd t = tau_;
  t(j, k) += h;
  if (j != k) t(k, j) += h;
  return PeriodMatrix(t);
}

PeriodMatrix product_tau(const PeriodMatrix& a, const PeriodMatrix& b) {
  int ga = a.genus(), gb = b.genus();
  Eigen::MatrixXcd t = Eigen::MatrixXcd::Zero(ga + gb, ga + gb);
  t.topLeftCorner(ga, ga) = a.tau();
  t.bottomRightCorner(gb, gb) = b.tau();
  return PeriodMatrix(t);
}

}  // namespace thetadiv
