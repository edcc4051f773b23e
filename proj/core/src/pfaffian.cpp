#include "thetadiv/pfaffian.hpp"

#include <cmath>
#include <sstream>

#include "thetadiv/errors.hpp"
#include "thetadiv/rng.hpp"

namespace thetadiv {

SkewMatrix::SkewMatrix(RatMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw DimensionMismatch("skew matrix must be square");
  for (int j = 0; j < m_.rows(); ++j) {
    if (!m_.at(j, j).is_zero()) throw Error("skew matrix: nonzero diagonal");
    for (int k = j + 1; k < m_.cols(); ++k)
      if (m_.at(j, k) != -m_.at(k, j)) throw Error("skew matrix: m[k][j] != -m[j][k]");
  }
}

SkewMatrix SkewMatrix::zero(int n) { return SkewMatrix(RatMatrix(n, n)); }

void SkewMatrix::set(int j, int k, const Rational& v) {
  if (j == k) {
    if (!v.is_zero()) throw Error("skew matrix: diagonal must stay zero");
    return;
  }
  m_.at(j, k) = v;
  m_.at(k, j) = -v;
}

namespace {

Rational pfaffian_rec(const RatMatrix& m, std::vector<int>& idx) {
  size_t n = idx.size();
  if (n == 0) return Rational(1);
  if (n == 2) return m.at(idx[0], idx[1]);
  Rational sum = 0;
  int first = idx[0];
  for (size_t pos = 1; pos < n; ++pos) {
    const Rational& a = m.at(first, idx[pos]);
    if (a.is_zero()) continue;
    std::vector<int> rest;
    rest.reserve(n - 2);
    for (size_t q = 1; q < n; ++q)
      if (q != pos) rest.push_back(idx[q]);
    Rational sub = pfaffian_rec(m, rest);
    if (pos % 2 == 1)
      sum += a * sub;
    else
      sum -= a * sub;
  }
  return sum;
}

}  // namespace

Rational pfaffian(const SkewMatrix& m) {
  if (m.dim() % 2 != 0) throw OddDimension("pfaffian: odd dimension");
  std::vector<int> idx(m.dim());
  for (int i = 0; i < m.dim(); ++i) idx[i] = i;
  return pfaffian_rec(m.mat(), idx);
}

Rational plucker_value(const std::vector<Rational>& x) {
  if (x.size() != 6) throw DimensionMismatch("plucker_value: expected 6 coordinates");
  return x[0] * x[5] - x[1] * x[4] + x[2] * x[3];
}

std::vector<Rational> wedge(const std::vector<Rational>& v, const std::vector<Rational>& w) {
  if (v.size() != 4 || w.size() != 4) throw DimensionMismatch("wedge: expected 4-vectors");
  auto p = [&](int a, int b) { return v[a] * w[b] - v[b] * w[a]; };
  return {p(0, 1), p(0, 2), p(0, 3), p(1, 2), p(1, 3), p(2, 3)};
}

bool QuadraticForm::is_zero() const {
  for (int r = 0; r < gram.rows(); ++r)
    for (int c = 0; c < gram.cols(); ++c)
      if (!gram.at(r, c).is_zero()) return false;
  return true;
}

QuadraticForm pfaffian_quadric(const PetriMap& mu) {
  if (mu.m.cols() != 6)
    throw DimensionMismatch("pfaffian_quadric: source must be Lambda^2 Q^4 (6 columns)");
  // Gram matrix of x0 x5 - x1 x4 + x2 x3
  RatMatrix gp(6, 6);
  Rational half(1, 2);
  gp.at(0, 5) = half;
  gp.at(5, 0) = half;
  gp.at(1, 4) = -half;
  gp.at(4, 1) = -half;
  gp.at(2, 3) = half;
  gp.at(3, 2) = half;
  return QuadraticForm{mu.m * gp * mu.m.transpose()};
}

namespace {

// Gram pairing of the Pluecker quadric: B(x, y) with Q(x) = B(x, x).
Rational plucker_pairing(const std::vector<Rational>& x, const std::vector<Rational>& y) {
  Rational half(1, 2);
  return half * (x[0] * y[5] + x[5] * y[0]) - half * (x[1] * y[4] + x[4] * y[1]) +
         half * (x[2] * y[3] + x[3] * y[2]);
}

bool is_perfect_square(const Rational& r) {
  if (r.sign() < 0) return false;
  auto int_square = [](Rational::Int v) {
    if (v < 0) return false;
    auto approx = (Rational::Int)std::sqrt((double)v);
    for (Rational::Int s = approx > 2 ? approx - 2 : 0; s <= approx + 2; ++s)
      if (s * s == v) return true;
    return false;
  };
  return int_square(r.num()) && int_square(r.den());
}

}  // namespace

bool kernel_meets_grassmannian(const PetriMap& mu) {
  auto ker = mu.m.kernel_basis();
  if (ker.size() >= 3)
    throw UnsupportedKernelDimension("kernel_meets_grassmannian: dim >= 3 unsupported");
  if (ker.empty()) return false;
  if (ker.size() == 1) return plucker_value(ker[0]).is_zero();
  return true;  // a projective line meets a quadric hypersurface over C
}

bool kernel_rational_decomposable(const PetriMap& mu) {
  auto ker = mu.m.kernel_basis();
  if (ker.size() >= 3)
    throw UnsupportedKernelDimension("kernel_rational_decomposable: dim >= 3 unsupported");
  if (ker.empty()) return false;
  if (ker.size() == 1) return plucker_value(ker[0]).is_zero();
  // Restrict to the pencil s*u + t*v: a s^2 + b s t + c t^2.
  Rational a = plucker_value(ker[0]);
  Rational c = plucker_value(ker[1]);
  Rational b = Rational(2) * plucker_pairing(ker[0], ker[1]);
  if (a.is_zero() || c.is_zero()) return true;  // a coordinate point is a root
  return is_perfect_square(b * b - Rational(4) * a * c);
}

namespace {

Rational random_rational(Rng& rng, int num_max = 9, int den_max = 3) {
  return Rational(rng.range(-num_max, num_max), rng.range(1, den_max));
}

std::vector<Rational> random_vector(Rng& rng, int n, int num_max = 5) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = Rational(rng.range(-num_max, num_max));
  return v;
}

RatMatrix random_invertible(Rng& rng, int n) {
  for (int tries = 0; tries < 64; ++tries) {
    RatMatrix m(n, n);
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c) m.at(r, c) = Rational(rng.range(-4, 4));
    if (!m.det().is_zero()) return m;
  }
  return RatMatrix::identity(n);
}

// Rows spanning the orthogonal complement (standard dot product) of the given
// vectors in Q^6, left-mixed by a random invertible matrix so the instances
// do not look echelonized.
RatMatrix complement_rows(Rng& rng, const std::vector<std::vector<Rational>>& span,
                          int extra_dependent_rows) {
  RatMatrix constraints = RatMatrix::from_rows(span);
  auto basis = constraints.kernel_basis();  // complement of span under dot pairing
  RatMatrix rows = RatMatrix::from_rows(basis);
  if (extra_dependent_rows > 0) {
    RatMatrix padded(rows.rows() + extra_dependent_rows, rows.cols());
    for (int r = 0; r < rows.rows(); ++r)
      for (int c = 0; c < rows.cols(); ++c) padded.at(r, c) = rows.at(r, c);
    for (int e = 0; e < extra_dependent_rows; ++e) {
      int dst = rows.rows() + e;
      for (int r = 0; r < rows.rows(); ++r) {
        Rational f = random_rational(rng, 3, 1);
        for (int c = 0; c < rows.cols(); ++c) padded.at(dst, c) += f * rows.at(r, c);
      }
    }
    rows = padded;
  }
  return random_invertible(rng, rows.rows()) * rows;
}

PetriMap random_instance(Rng& rng, int kind) {
  switch (kind) {
    case 1: {  // kernel spanned by one decomposable vector
      while (true) {
        auto w = wedge(random_vector(rng, 4), random_vector(rng, 4));
        bool zero = true;
        for (auto& x : w) zero = zero && x.is_zero();
        if (zero) continue;
        return PetriMap{complement_rows(rng, {w}, 0)};
      }
    }
    case 2: {  // kernel spanned by one nondecomposable vector
      while (true) {
        auto w1 = wedge(random_vector(rng, 4), random_vector(rng, 4));
        auto w2 = wedge(random_vector(rng, 4), random_vector(rng, 4));
        std::vector<Rational> w(6);
        for (int i = 0; i < 6; ++i) w[i] = w1[i] + w2[i];
        if (plucker_value(w).is_zero()) continue;
        return PetriMap{complement_rows(rng, {w}, 0)};
      }
    }
    case 3: {  // 2-dimensional kernel, rank-4 map padded back to 5 rows
      while (true) {
        auto u = random_vector(rng, 6);
        auto v = random_vector(rng, 6);
        RatMatrix probe = RatMatrix::from_rows({u, v});
        if (probe.rank() != 2) continue;
        return PetriMap{complement_rows(rng, {u, v}, 1)};
      }
    }
    default: {  // generic dense map
      RatMatrix m(5, 6);
      for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 6; ++c) m.at(r, c) = random_rational(rng);
      return PetriMap{m};
    }
  }
}

std::string dump_instance(const PetriMap& mu, const QuadraticForm& q, size_t kernel_dim,
                          bool lhs, bool rhs) {
  std::ostringstream os;
  os << "mu =\n"
     << mu.m.str() << "kernel dim " << kernel_dim << ", rank(Q) = " << q.rank()
     << ", rank<=4: " << (lhs ? "yes" : "no")
     << ", kernel meets Grassmannian: " << (rhs ? "yes" : "no") << "\n";
  return os.str();
}

}  // namespace

Rank4Report rank4_equivalence_check(int trials, uint64_t seed) {
  Rng rng(seed);
  Rank4Report rep;
  rep.trials = trials;
  for (int i = 0; i < trials; ++i) {
    PetriMap mu = random_instance(rng, i % 4);
    auto ker = mu.m.kernel_basis();
    if (ker.size() < 1 || ker.size() > 2) {
      ++rep.skipped_kernel_dim;
      continue;
    }
    QuadraticForm q = pfaffian_quadric(mu);
    if (q.is_zero()) {
      ++rep.zero_quadric;
      continue;
    }
    bool lhs = q.rank() <= 4;
    bool rhs = ker.size() == 1 ? plucker_value(ker[0]).is_zero() : true;
    ++rep.tested;
    if (lhs) ++rep.rank_le4;
    if (rhs) ++rep.meets;
    if (lhs != rhs) {
      ++rep.counterexamples;
      rep.counterexample_dump.push_back(dump_instance(mu, q, ker.size(), lhs, rhs));
    }
  }
  return rep;
}

}  // namespace thetadiv
