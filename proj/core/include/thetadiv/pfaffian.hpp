#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "thetadiv/ratlinalg.hpp"

namespace thetadiv {

/// Skew-symmetric matrix over the rationals: zero diagonal, m[k][j] = -m[j][k].
class SkewMatrix {
 public:
  explicit SkewMatrix(RatMatrix m);  // validates skew symmetry
  static SkewMatrix zero(int n);

  int dim() const { return m_.rows(); }
  const RatMatrix& mat() const { return m_; }
  const Rational& at(int j, int k) const { return m_.at(j, k); }
  /// Sets both (j,k) and (k,j) = -v; j == k is rejected unless v = 0.
  void set(int j, int k, const Rational& v);

 private:
  RatMatrix m_;
};

/// Pfaffian by recursive expansion along the first row; Pf^2 = det.
/// Throws OddDimension for odd sizes. Sign convention: for n = 4,
/// Pf = m12 m34 - m13 m24 + m14 m23.
Rational pfaffian(const SkewMatrix& m);

/// Basis of Lambda^2 Q^4 fixed throughout this module, in 1-based pair labels:
/// (12), (13), (14), (23), (24), (34). The Pluecker quadric in the
/// corresponding coordinates (x0..x5) is  x0 x5 - x1 x4 + x2 x3.
Rational plucker_value(const std::vector<Rational>& x6);

/// Pluecker coordinates of v wedge w for v, w in Q^4, in the basis above.
std::vector<Rational> wedge(const std::vector<Rational>& v, const std::vector<Rational>& w);

/// A skew multiplication pairing Lambda^2 Q^4 -> Q^{n_target}: rows indexed by
/// target coordinates, columns by the six basis vectors above. In the
/// geometric situation the target has dimension 5 and n_target is the rank of
/// the space of Prym-canonical forms, but any n_target >= 1 is accepted.
struct PetriMap {
  RatMatrix m;  // n_target x 6
};

struct QuadraticForm {
  RatMatrix gram;  // symmetric
  int dim() const { return gram.rows(); }
  int rank() const { return gram.rank(); }
  bool is_zero() const;
};

/// The quadric w -> Pf of the 4x4 skew matrix with entries <mu(s_k ^ s_j), w>;
/// equivalently the Pluecker quadric pulled back along the transpose of mu.
/// Requires 6 columns.
QuadraticForm pfaffian_quadric(const PetriMap& mu);

/// Whether the projectivized kernel of mu meets the Grassmannian quadric of
/// decomposable vectors, over the complex numbers:
///  - kernel of dimension 1: the Pluecker value of the generator vanishes;
///  - kernel of dimension 2: a projective line always meets a quadric
///    hypersurface, so the answer is yes (see kernel_rational_decomposable
///    for the rational refinement);
///  - dimension 0 returns false; dimension >= 3 throws
///    UnsupportedKernelDimension.
bool kernel_meets_grassmannian(const PetriMap& mu);

/// Rational refinement for 2-dimensional kernels: whether the pencil contains
/// a decomposable vector with rational coordinates. Decided exactly by a
/// discriminant perfect-square test on the restricted binary quadratic.
bool kernel_rational_decomposable(const PetriMap& mu);

struct Rank4Report {
  int trials = 0;
  int tested = 0;
  int skipped_kernel_dim = 0;  // kernel dimension outside {1, 2}
  int zero_quadric = 0;        // Pf identically zero: flagged, not asserted
  int rank_le4 = 0;
  int meets = 0;
  int counterexamples = 0;
  std::vector<std::string> counterexample_dump;
};

/// Property check of the equivalence  rank(Q) <= 4  <=>  the kernel of mu
/// meets the Grassmannian, over seeded random Petri maps mixing generic,
/// decomposable-kernel, nondecomposable-kernel and 2-dimensional-kernel
/// constructions. Failures are reported, never thrown.
Rank4Report rank4_equivalence_check(int trials, uint64_t seed);

}  // namespace thetadiv
