#include "thetadiv/divisor.hpp"

#include <sstream>

#include "thetadiv/errors.hpp"

namespace thetadiv {

namespace {

const std::vector<std::string> kA5bar = {"lambda1", "D"};
const std::vector<std::string> kR6tilde = {"lambda", "delta0'", "delta0''", "delta0ram"};
const std::vector<std::string> kM6bar = {"lambda", "delta0", "delta1", "delta2", "delta3"};
const std::vector<std::string> kG26taut = {"lambda", "a",        "b",       "c1V",
                                           "delta0'", "delta0''", "delta0ram"};

}  // namespace

const std::vector<std::string>& basis_symbols(Basis b) {
  switch (b) {
    case Basis::A5bar: return kA5bar;
    case Basis::R6tilde: return kR6tilde;
    case Basis::M6bar: return kM6bar;
    case Basis::G26taut: return kG26taut;
  }
  throw Error("unknown basis");
}

int basis_dim(Basis b) { return (int)basis_symbols(b).size(); }

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::A5bar: return "A5bar";
    case Basis::R6tilde: return "R6tilde";
    case Basis::M6bar: return "M6bar";
    case Basis::G26taut: return "G26taut";
  }
  throw Error("unknown basis");
}

DivisorClass::DivisorClass(Basis b, std::vector<Rational> c) : basis(b), coeffs(std::move(c)) {
  if ((int)coeffs.size() != basis_dim(b))
    throw DimensionMismatch("divisor class: coefficient count does not match basis");
}

DivisorClass DivisorClass::unit(Basis b, int index) {
  DivisorClass d(b);
  d.coeffs.at(index) = 1;
  return d;
}

const Rational& DivisorClass::coeff(std::string_view symbol) const {
  const auto& syms = basis_symbols(basis);
  for (size_t i = 0; i < syms.size(); ++i)
    if (syms[i] == symbol) return coeffs[i];
  throw Error("divisor class: no symbol '" + std::string(symbol) + "' in basis " +
              basis_name(basis));
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
  if (basis != o.basis) throw DimensionMismatch("divisor class sum: basis mismatch");
  DivisorClass s = *this;
  for (size_t i = 0; i < coeffs.size(); ++i) s.coeffs[i] += o.coeffs[i];
  return s;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
  return *this + o.scaled(Rational(-1));
}

DivisorClass DivisorClass::scaled(const Rational& s) const {
  DivisorClass d = *this;
  for (auto& c : d.coeffs) c *= s;
  return d;
}

bool DivisorClass::operator==(const DivisorClass& o) const {
  return basis == o.basis && coeffs == o.coeffs;
}

bool DivisorClass::is_zero() const {
  for (auto& c : coeffs)
    if (!c.is_zero()) return false;
  return true;
}

std::string DivisorClass::str() const {
  const auto& syms = basis_symbols(basis);
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    Rational c = coeffs[i];
    if (any)
      os << (c.sign() < 0 ? " - " : " + ");
    else if (c.sign() < 0)
      os << "-";
    any = true;
    Rational a = c.abs();
    if (a != Rational(1)) os << a.str() << " ";
    os << syms[i];
  }
  return any ? os.str() : "0";
}

DivisorClass LinearMap::operator()(const DivisorClass& x) const {
  if (x.basis != source) throw DimensionMismatch("linear map: basis mismatch");
  return DivisorClass(target, m.apply(x.coeffs));
}

}  // namespace thetadiv
