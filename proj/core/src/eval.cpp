#include "thetadiv/eval.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "thetadiv/errors.hpp"

namespace thetadiv {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr std::complex<double> kI{0.0, 1.0};

// Envelope for one lattice term at distance r = ||m + eps/2||_2:
//   f(r) = (2 pi r)^order * exp(-pi y r^2 + 2 pi b r),
// where y = y_min(Im tau) and b = ||Im z||_2. The tail over the region
// ||p||_inf > R is bounded shell by shell: points in an infinity-norm shell
// [t, t+1/2) number at most (2(t+1/2)+2)^g and each contributes at most f(t)
// once f is decreasing past t.
struct TailEnvelope {
  double y;
  double b;
  int order;
  int g;

  double peak() const {
    // zero of d/dr log f = order/r - 2 pi y r + 2 pi b
    return (b + std::sqrt(b * b + 2.0 * y * order / kPi)) / (2.0 * y);
  }

  double f(double r) const {
    double poly = order == 0 ? 1.0 : std::pow(2.0 * kPi * r, order);
    return poly * std::exp(-kPi * y * r * r + 2.0 * kPi * b * r);
  }

  // Bound on term(t + 1/2)/term(t); every factor decreases in t.
  double shell_ratio(double t) const {
    double count_ratio = std::pow((2.0 * t + 4.0) / (2.0 * t + 3.0), g);
    double poly_ratio = order == 0 ? 1.0 : std::pow((t + 0.5) / t, order);
    return count_ratio * poly_ratio * std::exp(-kPi * y * (t + 0.25) + kPi * b);
  }

  double tail_beyond(double R) const {
    double t = R + 0.5;  // half-integer coordinates: ||p||_inf > R means >= R + 1/2
    if (t < peak()) return std::numeric_limits<double>::infinity();
    double total = 0.0;
    for (int k = 0; k < 100000; ++k) {
      double term = std::pow(2.0 * (t + 0.5) + 2.0, g) * f(t);
      total += term;
      double rho = shell_ratio(t);
      if (rho < 0.5) return total + term * rho / (1.0 - rho);
      t += 0.5;
    }
    return std::numeric_limits<double>::infinity();
  }
};

// Shared series evaluator. Accumulates value and, for order >= 1/2, the
// gradient/Hessian, over the box ||m + eps/2||_inf <= R.
void accumulate(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                const Characteristic& chi, int R, int order, ThetaJet& out) {
  const int g = tau.genus();
  const Eigen::MatrixXcd& t = tau.tau();

  std::vector<int> lo(g), hi(g), m(g);
  for (int j = 0; j < g; ++j) {
    double e = chi.eps[j] * 0.5;
    lo[j] = (int)std::ceil(-R - e);
    hi[j] = (int)std::floor(R - e);
    m[j] = lo[j];
  }

  out.value = 0;
  if (order >= 1) out.grad = Eigen::VectorXcd::Zero(g);
  if (order >= 2) out.hess = Eigen::MatrixXcd::Zero(g, g);

  std::vector<double> p(g);
  while (true) {
    for (int j = 0; j < g; ++j) p[j] = m[j] + chi.eps[j] * 0.5;

    std::complex<double> quad = 0, lin = 0;
    for (int j = 0; j < g; ++j) {
      std::complex<double> row = 0;
      for (int k = 0; k < g; ++k) row += t(j, k) * p[k];
      quad += p[j] * row;
      lin += p[j] * (z(j) + chi.delta[j] * 0.5);
    }
    std::complex<double> term = std::exp(kI * kPi * (quad + 2.0 * lin));

    out.value += term;
    if (order >= 1)
      for (int j = 0; j < g; ++j) out.grad(j) += 2.0 * kPi * kI * p[j] * term;
    if (order >= 2) {
      std::complex<double> c = -4.0 * kPi * kPi * term;  // (2 pi i)^2
      for (int j = 0; j < g; ++j)
        for (int k = j; k < g; ++k) out.hess(j, k) += c * p[j] * p[k];
    }

    int j = 0;
    for (; j < g; ++j) {
      if (++m[j] <= hi[j]) break;
      m[j] = lo[j];
    }
    if (j == g) break;
  }

  if (order >= 2)
    for (int j = 0; j < g; ++j)
      for (int k = 0; k < j; ++k) out.hess(j, k) = out.hess(k, j);
}

void check_shapes(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                  const Characteristic& chi) {
  if (chi.genus() != tau.genus() || z.size() != tau.genus())
    throw DimensionMismatch("theta: genus mismatch between tau, z, characteristic");
}

}  // namespace

int truncation_radius(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                      const Characteristic& chi, int order, double tol,
                      int max_radius) {
  check_shapes(tau, z, chi);
  if (order < 0 || order > 2) throw Error("truncation_radius: order must be 0, 1 or 2");
  if (!(tol > 0)) throw Error("truncation_radius: tol must be positive");
  TailEnvelope env{tau.y_min(), z.imag().norm(), order, tau.genus()};
  for (int R = 1; R <= max_radius; ++R)
    if (env.tail_beyond((double)R) <= tol) return R;
  throw PrecisionUnreachable("truncation_radius: tol unreachable within max_radius");
}

ThetaJet theta_jet(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                   const Characteristic& chi, const EvalConfig& cfg) {
  check_shapes(tau, z, chi);
  int R = truncation_radius(tau, z, chi, 2, cfg.tol, cfg.max_radius);
  ThetaJet jet;
  accumulate(tau, z, chi, R, 2, jet);
  TailEnvelope env{tau.y_min(), z.imag().norm(), 2, tau.genus()};
  jet.trunc_bound = env.tail_beyond((double)R);
  return jet;
}

std::complex<double> theta_value(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                                 const Characteristic& chi, const EvalConfig& cfg) {
  check_shapes(tau, z, chi);
  int R = truncation_radius(tau, z, chi, 0, cfg.tol, cfg.max_radius);
  ThetaJet jet;
  accumulate(tau, z, chi, R, 0, jet);
  return jet.value;
}

double heat_residual(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                     const Characteristic& chi, int j, int k, double h,
                     const EvalConfig& cfg) {
  check_shapes(tau, z, chi);
  if (j < 0 || j >= tau.genus() || k < 0 || k >= tau.genus())
    throw DimensionMismatch("heat_residual: index out of range");
  if (!(h > 0)) throw Error("heat_residual: step must be positive");

  ThetaJet jet = theta_jet(tau, z, chi, cfg);

  // The stepped evaluations run at tolerance tol*h so the difference quotient
  // contributes at most ~tol to the residual instead of 2*tol/h.
  EvalConfig fd_cfg = cfg;
  fd_cfg.tol = cfg.tol * h;
  std::complex<double> plus = theta_value(tau.shifted(j, k, h), z, chi, fd_cfg);
  std::complex<double> minus = theta_value(tau.shifted(j, k, -h), z, chi, fd_cfg);
  std::complex<double> fd = (plus - minus) / (2.0 * h);

  double kron = j == k ? 1.0 : 0.0;
  return std::abs(jet.hess(j, k) - 2.0 * kPi * kI * (1.0 + kron) * fd);
}

double parity_defect(const PeriodMatrix& tau, const Eigen::VectorXcd& z,
                     const Characteristic& chi, const EvalConfig& cfg) {
  check_shapes(tau, z, chi);
  std::complex<double> a = theta_value(tau, -z, chi, cfg);
  std::complex<double> b = theta_value(tau, z, chi, cfg);
  double sign = chi.parity() == 0 ? 1.0 : -1.0;
  return std::abs(a - sign * b);
}

}  // namespace thetadiv
