#include <doctest.h>

#include "thetadiv/errors.hpp"
#include "thetadiv/ratlinalg.hpp"
#include "thetadiv/rng.hpp"

using namespace thetadiv;

namespace {

RatMatrix random_matrix(Rng& rng, int r, int c) {
  RatMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = Rational(rng.range(-6, 6), rng.range(1, 3));
  return m;
}

// Independent determinant: cofactor expansion along the first row.
Rational cofactor_det(const RatMatrix& m) {
  int n = m.rows();
  if (n == 1) return m.at(0, 0);
  Rational d = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c).is_zero()) continue;
    RatMatrix minor(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int jj = 0;
      for (int j = 0; j < n; ++j) {
        if (j == c) continue;
        minor.at(i - 1, jj++) = m.at(i, j);
      }
    }
    Rational term = m.at(0, c) * cofactor_det(minor);
    d += c % 2 == 0 ? term : -term;
  }
  return d;
}

}  // namespace

TEST_CASE("determinant matches cofactor expansion on random 4x4") {
  Rng rng(11);
  for (int t = 0; t < 25; ++t) {
    RatMatrix m = random_matrix(rng, 4, 4);
    CHECK(m.det() == cofactor_det(m));
  }
}

TEST_CASE("rank and kernel are consistent") {
  Rng rng(12);
  for (int t = 0; t < 25; ++t) {
    RatMatrix m = random_matrix(rng, 3 + (int)rng.range(0, 2), 5);
    int rk = m.rank();
    auto ker = m.kernel_basis();
    CHECK((int)ker.size() == m.cols() - rk);
    for (auto& v : ker) {
      auto image = m.apply(v);
      for (auto& x : image) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("solve returns the exact solution") {
  Rng rng(13);
  for (int t = 0; t < 10; ++t) {
    RatMatrix m = random_matrix(rng, 4, 4);
    if (m.det().is_zero()) continue;
    std::vector<Rational> x0;
    for (int i = 0; i < 4; ++i) x0.push_back(Rational(rng.range(-5, 5), rng.range(1, 2)));
    auto b = m.apply(x0);
    CHECK(m.solve(b) == x0);
  }
}

TEST_CASE("singular systems are rejected") {
  RatMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 2;
  m.at(1, 1) = 4;
  CHECK(m.det().is_zero());
  CHECK_THROWS_AS(m.solve({Rational(1), Rational(1)}), SingularSystem);
}

TEST_CASE("product and transpose shapes") {
  Rng rng(14);
  RatMatrix a = random_matrix(rng, 2, 3);
  RatMatrix b = random_matrix(rng, 3, 4);
  RatMatrix p = a * b;
  CHECK(p.rows() == 2);
  CHECK(p.cols() == 4);
  CHECK(p.transpose() == b.transpose() * a.transpose());
  CHECK_THROWS_AS(b * a * a, DimensionMismatch);
}
