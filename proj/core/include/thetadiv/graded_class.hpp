#pragma once

#include <map>
#include <string>
#include <utility>

#include "thetadiv/rational.hpp"

namespace thetadiv {

/// Polynomial in the universal theta class T and the Hodge class l1 on the
/// universal family over A_g, exact rational coefficients. Any l2 input is
/// rewritten eagerly through l2 = l1^2/2, so stored monomials are T^a l1^b.
class GradedClass {
 public:
  explicit GradedClass(int genus) : genus_(genus) {}

  int genus() const { return genus_; }

  /// Adds coeff * T^a l1^b l2^c (c rewritten on entry); prunes zero terms.
  GradedClass& add(int theta_exp, int lambda1_exp, int lambda2_exp, const Rational& coeff);
  static GradedClass term(int genus, int theta_exp, int lambda1_exp, const Rational& coeff);

  const std::map<std::pair<int, int>, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  GradedClass operator+(const GradedClass& o) const;
  GradedClass operator*(const GradedClass& o) const;
  GradedClass scaled(const Rational& s) const;
  bool operator==(const GradedClass& o) const;

  std::string str() const;

 private:
  int genus_;
  std::map<std::pair<int, int>, Rational> terms_;  // (theta_exp, lambda1_exp) -> coeff
};

/// Polynomial of degree <= 2 in l1 on the base A_g.
class BaseClass {
 public:
  BaseClass() = default;
  BaseClass(Rational c0, Rational c1, Rational c2) : c_{c0, c1, c2} {}
  static BaseClass lambda_sq(const Rational& c) { return BaseClass(0, 0, c); }

  const Rational& coeff(int deg) const;
  BaseClass operator+(const BaseClass& o) const;
  BaseClass operator-(const BaseClass& o) const;
  BaseClass scaled(const Rational& s) const;
  bool operator==(const BaseClass& o) const { return c_[0] == o.c_[0] && c_[1] == o.c_[1] && c_[2] == o.c_[2]; }

  std::string str() const;

 private:
  Rational c_[3];
};

/// Pushforward along the universal family, applied term by term with the
/// projection formula:
///   T^k -> 0 (k < g), g! (k = g), (g+1)!/2 l1 (k = g+1), (g+2)!/8 l1^2 (k = g+2).
/// Throws UnsupportedPower for theta exponents above g+2 and DegreeOverflow
/// if a nonzero image would exceed degree 2 in l1.
BaseClass pushforward(const GradedClass& x);

/// T^g + T^{g-1} l1 + T^{g-2} l1^2/2: the top Chern class of the twisted
/// relative cotangent bundle, truncated to what survives pushforward in
/// codimension <= 2 (higher Hodge Chern classes cannot contribute).
GradedClass chern_top_omega_theta(int g);

/// lambda1-coefficient of the pushforward of chern_top_omega_theta(g) * T:
/// the class of the locus of singular theta divisors, g!(g+3)/2.
Rational n0_lambda_coefficient(int g);

/// Codimension-2 class of singular points with degenerate Hessian over the
/// whole singularity locus, counted with the cycle convention of
/// n0 = thetanull + 2*(other component): the pushforward of
/// chern_top_omega_theta(g) * T * (g T + 2 l1), where (g T + 2 l1) is the
/// first Chern class of the Hessian determinant bundle. Checked against the
/// closed form g!/8 (g^3 + 7g^2 + 18g + 24) before returning. Needs g >= 4.
BaseClass class_n0_hessian(int g);

struct ThetanullAudit {
  Rational even_count;      // 2^{g-1}(2^g + 1)
  Rational constant_weight; // 1/2 per theta constant
  Rational hessian_weight;  // (g+4)/2 on the constant's zero locus
  BaseClass cls;
};

/// (g+4) 2^{g-3} (2^g + 1) l1^2 with the three factors exposed for audit.
ThetanullAudit class_thetanull_hessian_audit(int g);
BaseClass class_thetanull_hessian(int g);  // g >= 2

/// The class of the locus of theta divisors with a non-ordinary double point
/// away from the two-torsion component, written [H] in the CLI output:
/// (class_n0_hessian - class_thetanull_hessian)/2, checked against
/// g!/16 (g^3+7g^2+18g+24) - (g+4) 2^{g-4} (2^g+1). Needs g >= 4.
BaseClass class_nonordinary(int g);

/// Weight of the determinant of the tau-derivative matrix of a weight-w form,
/// restricted to the form's zero locus: g*w + 2.
Rational det_hessian_weight(const Rational& w, int g);

struct ModularWeights {
  Rational weight_theta_product;  // product of all even theta constants
  Rational weight_n0prime;        // form cutting the residual component
  Rational n0_lambda_coeff;       // pushforward-derived, g!(g+3)/2
  bool split_consistent;          // weight_theta_product + 2*weight_n0prime == n0 coeff
};
ModularWeights modular_weights(int g);  // g >= 2

struct Genus4Forms {
  Rational weight_form;          // 8
  Rational weight_det_hessian;   // 34 = 8*4 + 2
  Rational intersection_class;   // 8*34 = 272, the l1^2 coefficient
};
/// In genus 4 the residual component is cut by a single weight-8 form and the
/// degenerate-Hessian condition by its weight-34 determinant; their complete
/// intersection has class 272 l1^2, matching class_thetanull_hessian(4).
Genus4Forms genus4_complete_intersection();

}  // namespace thetadiv
