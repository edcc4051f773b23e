#include "thetadiv/graded_class.hpp"

#include <sstream>

#include "thetadiv/errors.hpp"

namespace thetadiv {

GradedClass& GradedClass::add(int theta_exp, int lambda1_exp, int lambda2_exp,
                              const Rational& coeff) {
  if (theta_exp < 0 || lambda1_exp < 0 || lambda2_exp < 0)
    throw Error("graded class: negative exponent");
  // l2 = l1^2 / 2, applied per power
  Rational c = coeff;
  int b = lambda1_exp;
  for (int i = 0; i < lambda2_exp; ++i) {
    c *= Rational(1, 2);
    b += 2;
  }
  auto key = std::make_pair(theta_exp, b);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (!c.is_zero()) terms_.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GradedClass GradedClass::term(int genus, int theta_exp, int lambda1_exp,
                              const Rational& coeff) {
  GradedClass x(genus);
  x.add(theta_exp, lambda1_exp, 0, coeff);
  return x;
}

GradedClass GradedClass::operator+(const GradedClass& o) const {
  if (genus_ != o.genus_) throw DimensionMismatch("graded class sum: genus mismatch");
  GradedClass s = *this;
  for (auto& [key, c] : o.terms_) s.add(key.first, key.second, 0, c);
  return s;
}

GradedClass GradedClass::operator*(const GradedClass& o) const {
  if (genus_ != o.genus_) throw DimensionMismatch("graded class product: genus mismatch");
  GradedClass p(genus_);
  for (auto& [ka, ca] : terms_)
    for (auto& [kb, cb] : o.terms_)
      p.add(ka.first + kb.first, ka.second + kb.second, 0, ca * cb);
  return p;
}

GradedClass GradedClass::scaled(const Rational& s) const {
  GradedClass x(genus_);
  for (auto& [key, c] : terms_) x.add(key.first, key.second, 0, c * s);
  return x;
}

bool GradedClass::operator==(const GradedClass& o) const {
  return genus_ == o.genus_ && terms_ == o.terms_;
}

std::string GradedClass::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [key, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.str();
    if (key.first) os << " T^" << key.first;
    if (key.second) os << " l1^" << key.second;
  }
  return os.str();
}

const Rational& BaseClass::coeff(int deg) const {
  if (deg < 0 || deg > 2) throw Error("base class: degree out of range");
  return c_[deg];
}

BaseClass BaseClass::operator+(const BaseClass& o) const {
  return BaseClass(c_[0] + o.c_[0], c_[1] + o.c_[1], c_[2] + o.c_[2]);
}

BaseClass BaseClass::operator-(const BaseClass& o) const {
  return BaseClass(c_[0] - o.c_[0], c_[1] - o.c_[1], c_[2] - o.c_[2]);
}

BaseClass BaseClass::scaled(const Rational& s) const {
  return BaseClass(c_[0] * s, c_[1] * s, c_[2] * s);
}

std::string BaseClass::str() const {
  std::ostringstream os;
  bool any = false;
  const char* names[3] = {"", " l1", " l1^2"};
  for (int d = 0; d < 3; ++d) {
    if (c_[d].is_zero()) continue;
    if (any) os << " + ";
    os << c_[d].str() << names[d];
    any = true;
  }
  return any ? os.str() : "0";
}

BaseClass pushforward(const GradedClass& x) {
  const int g = x.genus();
  BaseClass out;
  for (auto& [key, c] : x.terms()) {
    auto [a, b] = key;
    if (a > g + 2)
      throw UnsupportedPower("pushforward: theta exponent above g+2");
    if (a < g) continue;
    Rational factor;
    int extra = 0;
    if (a == g) {
      factor = factorial_q(g);
    } else if (a == g + 1) {
      factor = factorial_q(g + 1) / Rational(2);
      extra = 1;
    } else {
      factor = factorial_q(g + 2) / Rational(8);
      extra = 2;
    }
    int deg = b + extra;
    if (deg > 2) throw DegreeOverflow("pushforward: image degree above 2 in l1");
    Rational coeffs[3] = {0, 0, 0};
    coeffs[deg] = c * factor;
    out = out + BaseClass(coeffs[0], coeffs[1], coeffs[2]);
  }
  return out;
}

GradedClass chern_top_omega_theta(int g) {
  if (g < 2) throw Error("chern_top_omega_theta: needs g >= 2");
  GradedClass x(g);
  x.add(g, 0, 0, Rational(1));
  x.add(g - 1, 1, 0, Rational(1));
  x.add(g - 2, 0, 1, Rational(1));  // lambda2 slot, rewritten to l1^2/2
  return x;
}

Rational n0_lambda_coefficient(int g) {
  GradedClass x = chern_top_omega_theta(g) * GradedClass::term(g, 1, 0, Rational(1));
  return pushforward(x).coeff(1);
}

namespace {

BaseClass closed_n0_hessian(int g) {
  Rational poly = Rational(g) * g * g + Rational(7) * g * g + Rational(18) * g + 24;
  return BaseClass::lambda_sq(factorial_q(g) / Rational(8) * poly);
}

BaseClass closed_nonordinary(int g) {
  Rational poly = Rational(g) * g * g + Rational(7) * g * g + Rational(18) * g + 24;
  Rational v = factorial_q(g) / Rational(16) * poly -
               Rational(g + 4) * pow2_q(g - 4) * (pow2_q(g) + Rational(1));
  return BaseClass::lambda_sq(v);
}

}  // namespace

BaseClass class_n0_hessian(int g) {
  if (g < 4) throw Error("class_n0_hessian: needs g >= 4");
  GradedClass hessian_bundle(g);  // c1 of O(gT) tensor (det Hodge)^2
  hessian_bundle.add(1, 0, 0, Rational(g));
  hessian_bundle.add(0, 1, 0, Rational(2));
  GradedClass total = chern_top_omega_theta(g) * GradedClass::term(g, 1, 0, Rational(1)) *
                      hessian_bundle;
  BaseClass pushed = pushforward(total);
  BaseClass closed = closed_n0_hessian(g);
  if (!(pushed == closed))
    throw CertificateFailure("class_n0_hessian: pipeline disagrees with closed form at g=" +
                             std::to_string(g) + ": " + pushed.str() + " vs " + closed.str());
  return pushed;
}

ThetanullAudit class_thetanull_hessian_audit(int g) {
  if (g < 2) throw Error("class_thetanull_hessian: needs g >= 2");
  ThetanullAudit a;
  a.even_count = pow2_q(g - 1) * (pow2_q(g) + Rational(1));
  a.constant_weight = Rational(1, 2);
  a.hessian_weight = det_hessian_weight(a.constant_weight, g);  // (g+4)/2
  a.cls = BaseClass::lambda_sq(a.even_count * a.constant_weight * a.hessian_weight);
  return a;
}

BaseClass class_thetanull_hessian(int g) { return class_thetanull_hessian_audit(g).cls; }

BaseClass class_nonordinary(int g) {
  if (g < 4) throw Error("class_nonordinary: needs g >= 4");
  BaseClass h =
      (class_n0_hessian(g) - class_thetanull_hessian(g)).scaled(Rational(1, 2));
  BaseClass closed = closed_nonordinary(g);
  if (!(h == closed))
    throw CertificateFailure("class_nonordinary: pipeline disagrees with closed form at g=" +
                             std::to_string(g));
  return h;
}

Rational det_hessian_weight(const Rational& w, int g) { return Rational(g) * w + Rational(2); }

ModularWeights modular_weights(int g) {
  if (g < 2) throw Error("modular_weights: needs g >= 2");
  ModularWeights mw;
  Rational even_count = pow2_q(g - 1) * (pow2_q(g) + Rational(1));
  mw.weight_theta_product = even_count * Rational(1, 2);  // = 2^{g-2}(2^g+1)
  mw.n0_lambda_coeff = n0_lambda_coefficient(g);
  mw.weight_n0prime = (mw.n0_lambda_coeff - mw.weight_theta_product) / Rational(2);
  // closed form g!(g+3)/4 - 2^{g-3}(2^g+1)
  Rational closed = factorial_q(g) * Rational(g + 3) / Rational(4) -
                    pow2_q(g - 3) * (pow2_q(g) + Rational(1));
  mw.split_consistent = mw.weight_n0prime == closed &&
                        mw.weight_theta_product + Rational(2) * mw.weight_n0prime ==
                            mw.n0_lambda_coeff;
  return mw;
}

Genus4Forms genus4_complete_intersection() {
  Genus4Forms f;
  f.weight_form = modular_weights(4).weight_n0prime;        // 8
  f.weight_det_hessian = det_hessian_weight(f.weight_form, 4);  // 34
  f.intersection_class = f.weight_form * f.weight_det_hessian; // 272
  return f;
}

}  // namespace thetadiv
