#pragma once

#include <string>
#include <vector>

#include "thetadiv/rational.hpp"

namespace thetadiv {

/// Dense matrix over the exact rationals. All decisions (rank, kernel,
/// determinant) are discrete, so there are no thresholds anywhere.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(int n);
  static RatMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return a_[r * cols_ + c]; }
  const Rational& at(int r, int c) const { return a_[r * cols_ + c]; }

  RatMatrix transpose() const;
  RatMatrix operator*(const RatMatrix& o) const;
  RatMatrix operator+(const RatMatrix& o) const;
  RatMatrix operator-(const RatMatrix& o) const;
  RatMatrix scaled(const Rational& s) const;
  std::vector<Rational> apply(const std::vector<Rational>& x) const;

  bool operator==(const RatMatrix& o) const;

  int rank() const;
  Rational det() const;  // square matrices only
  /// Basis of the right kernel {x : A x = 0}.
  std::vector<std::vector<Rational>> kernel_basis() const;
  /// Solve A x = b for square invertible A; throws SingularSystem otherwise.
  std::vector<Rational> solve(const std::vector<Rational>& b) const;

  std::string str() const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> a_;
};

}  // namespace thetadiv
