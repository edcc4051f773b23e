#include "thetadiv/ratlinalg.hpp"

#include <sstream>

#include "thetadiv/errors.hpp"

namespace thetadiv {

RatMatrix RatMatrix::identity(int n) {
  RatMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty()) return {};
  RatMatrix m((int)rows.size(), (int)rows[0].size());
  for (int r = 0; r < m.rows(); ++r) {
    if ((int)rows[r].size() != m.cols()) throw DimensionMismatch("ragged row list");
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

RatMatrix RatMatrix::operator*(const RatMatrix& o) const {
  if (cols_ != o.rows_) throw DimensionMismatch("matrix product shape");
  RatMatrix p(rows_, o.cols_);
  for (int r = 0; r < rows_; ++r)
    for (int k = 0; k < cols_; ++k) {
      const Rational& v = at(r, k);
      if (v.is_zero()) continue;
      for (int c = 0; c < o.cols_; ++c) p.at(r, c) += v * o.at(k, c);
    }
  return p;
}

RatMatrix RatMatrix::operator+(const RatMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch("matrix sum shape");
  RatMatrix s = *this;
  for (size_t i = 0; i < a_.size(); ++i) s.a_[i] += o.a_[i];
  return s;
}

RatMatrix RatMatrix::operator-(const RatMatrix& o) const {
  return *this + o.scaled(Rational(-1));
}

RatMatrix RatMatrix::scaled(const Rational& s) const {
  RatMatrix m = *this;
  for (auto& v : m.a_) v *= s;
  return m;
}

std::vector<Rational> RatMatrix::apply(const std::vector<Rational>& x) const {
  if ((int)x.size() != cols_) throw DimensionMismatch("matrix-vector shape");
  std::vector<Rational> y(rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) y[r] += at(r, c) * x[c];
  return y;
}

bool RatMatrix::operator==(const RatMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

// Row echelon form in place; returns pivot columns. |det_out|, when wanted,
// accumulates the product of pivots with row-swap signs (square case).
std::vector<int> echelonize(RatMatrix& m, Rational* det_out) {
  std::vector<int> pivots;
  Rational det = 1;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int p = -1;
    for (int i = r; i < m.rows(); ++i)
      if (!m.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
      det = -det;
    }
    det *= m.at(r, c);
    for (int i = r + 1; i < m.rows(); ++i) {
      if (m.at(i, c).is_zero()) continue;
      Rational f = m.at(i, c) / m.at(r, c);
      m.at(i, c) = 0;
      for (int j = c + 1; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  if (det_out) *det_out = ((int)pivots.size() == m.rows() && m.rows() == m.cols())
                              ? det
                              : Rational(0);
  return pivots;
}

}  // namespace

int RatMatrix::rank() const {
  RatMatrix m = *this;
  return (int)echelonize(m, nullptr).size();
}

Rational RatMatrix::det() const {
  if (rows_ != cols_) throw DimensionMismatch("determinant of non-square matrix");
  RatMatrix m = *this;
  Rational d;
  echelonize(m, &d);
  return d;
}

std::vector<std::vector<Rational>> RatMatrix::kernel_basis() const {
  RatMatrix m = *this;
  std::vector<int> pivots = echelonize(m, nullptr);
  // back-substitute to reduced form
  for (int r = (int)pivots.size() - 1; r >= 0; --r) {
    int c = pivots[r];
    Rational inv = Rational(1) / m.at(r, c);
    for (int j = c; j < cols_; ++j) m.at(r, j) *= inv;
    for (int i = 0; i < r; ++i) {
      Rational f = m.at(i, c);
      if (f.is_zero()) continue;
      for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rational>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols_);
    v[free] = 1;
    for (int r = 0; r < (int)pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rational> RatMatrix::solve(const std::vector<Rational>& b) const {
  if (rows_ != cols_) throw DimensionMismatch("solve on non-square matrix");
  if ((int)b.size() != rows_) throw DimensionMismatch("solve rhs size");
  RatMatrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) aug.at(r, c) = at(r, c);
    aug.at(r, cols_) = b[r];
  }
  std::vector<int> pivots = echelonize(aug, nullptr);
  if ((int)pivots.size() != rows_ || pivots.back() == cols_)
    throw SingularSystem("linear system has no unique solution");
  std::vector<Rational> x(cols_);
  for (int r = rows_ - 1; r >= 0; --r) {
    Rational s = aug.at(r, cols_);
    for (int c = r + 1; c < cols_; ++c) s -= aug.at(r, c) * x[c];
    x[r] = s / aug.at(r, r);
  }
  return x;
}

std::string RatMatrix::str() const {
  std::ostringstream os;
  for (int r = 0; r < rows_; ++r) {
    for (int c = 0; c < cols_; ++c) {
      if (c) os << ' ';
      os << at(r, c).str();
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace thetadiv
