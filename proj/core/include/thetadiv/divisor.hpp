#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thetadiv/ratlinalg.hpp"

namespace thetadiv {

/// Named rational Picard bases used by the Prym ledger.
enum class Basis {
  A5bar,    // {lambda1, D}
  R6tilde,  // {lambda, delta0', delta0'', delta0ram}
  M6bar,    // {lambda, delta0, delta1, delta2, delta3}
  G26taut,  // {lambda, a, b, c1V, delta0', delta0'', delta0ram}
};

const std::vector<std::string>& basis_symbols(Basis b);
int basis_dim(Basis b);
std::string basis_name(Basis b);

/// Exact divisor class: a coefficient vector in one of the named bases.
struct DivisorClass {
  Basis basis;
  std::vector<Rational> coeffs;

  explicit DivisorClass(Basis b) : basis(b), coeffs(basis_dim(b)) {}
  DivisorClass(Basis b, std::vector<Rational> c);
  static DivisorClass unit(Basis b, int index);

  const Rational& coeff(std::string_view symbol) const;

  DivisorClass operator+(const DivisorClass& o) const;
  DivisorClass operator-(const DivisorClass& o) const;
  DivisorClass scaled(const Rational& s) const;
  bool operator==(const DivisorClass& o) const;
  bool is_zero() const;

  std::string str() const;  // e.g. "108 lambda1 - 14 D"
};

/// Exact linear map between Picard bases; columns follow the source symbols.
struct LinearMap {
  Basis source;
  Basis target;
  RatMatrix m;  // dim(target) x dim(source)

  DivisorClass operator()(const DivisorClass& x) const;
};

}  // namespace thetadiv
