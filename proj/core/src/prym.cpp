#include "thetadiv/prym.hpp"

#include <sstream>

#include "thetadiv/errors.hpp"

namespace thetadiv {

namespace {

DivisorClass make(Basis b, std::vector<long long> ints) {
  std::vector<Rational> c(ints.begin(), ints.end());
  return DivisorClass(b, std::move(c));
}

std::map<std::string, NamedClass> build_known() {
  std::map<std::string, NamedClass> k;
  k.emplace("N0prime", NamedClass{make(Basis::A5bar, {108, -14}),
                                  "closure of the component of the singular-theta locus whose "
                                  "singularities avoid two-torsion"});
  k.emplace("Dram", NamedClass{make(Basis::A5bar, {4 * 153, -4 * 19}),
                               "closure of the Prym varieties of two-branch-point double covers "
                               "of genus-5 curves"});
  k.emplace("GP_6_4",
            NamedClass{make(Basis::M6bar, {94, -12, -50, -78, -88}),
                       "genus-6 curves with a degree-4 pencil failing the Petri condition"});
  k.emplace("GP_6_5", NamedClass{make(Basis::M6bar, {8 * 65, -64, -8 * 31, -360, -392}),
                                 "genus-6 curves with a vanishing theta characteristic"});
  k.emplace("Qtilde",
            NamedClass{DivisorClass(Basis::R6tilde,
                                    {Rational(7), Rational(-1), Rational(-4), Rational(-3, 2)}),
                       "closure of the ramification divisor of the Prym map"});
  k.emplace("Z",
            NamedClass{DivisorClass(Basis::R6tilde,
                                    {Rational(7), Rational(-1), Rational(-1), Rational(-3, 2)}),
                       "degeneracy locus of multiplication of Prym-canonical forms on the "
                       "partial compactification"});
  k.emplace("c1N1",
            NamedClass{DivisorClass(Basis::R6tilde,
                                    {Rational(1), Rational(0), Rational(0), Rational(-1, 4)}),
                       "first Chern class of the bundle of Prym-canonical forms"});
  k.emplace("c1N2",
            NamedClass{DivisorClass(Basis::R6tilde,
                                    {Rational(13), Rational(-1), Rational(-1), Rational(-3)}),
                       "first Chern class of the bundle of twisted quadratic differentials"});
  k.emplace("Utilde", NamedClass{make(Basis::R6tilde, {94, -12, -12, -24}),
                                 "closure of the antiramification divisor: the forgetful "
                                 "pullback of GP_6_4"});
  return k;
}

}  // namespace

const std::map<std::string, NamedClass>& known_classes() {
  static const std::map<std::string, NamedClass> k = build_known();
  return k;
}

const DivisorClass& known(const std::string& name) {
  auto& k = known_classes();
  auto it = k.find(name);
  if (it == k.end()) throw Error("known_classes: no entry '" + name + "'");
  return it->second.cls;
}

LinearMap forgetful_pullback() {
  RatMatrix m(4, 5);
  m.at(0, 0) = 1;  // lambda -> lambda
  m.at(1, 1) = 1;  // delta0 -> d0' + d0'' + 2 d0ram
  m.at(2, 1) = 1;
  m.at(3, 1) = 2;
  // delta_{1,2,3} restrict to zero
  return LinearMap{Basis::M6bar, Basis::R6tilde, m};
}

ForgetfulResult forgetful_pullback_apply(const DivisorClass& m6class) {
  if (m6class.basis != Basis::M6bar)
    throw DimensionMismatch("forgetful_pullback: expected an M6bar class");
  bool dropped = !m6class.coeff("delta1").is_zero() || !m6class.coeff("delta2").is_zero() ||
                 !m6class.coeff("delta3").is_zero();
  return ForgetfulResult{forgetful_pullback()(m6class), dropped};
}

LinearMap prym_pullback() {
  RatMatrix m(4, 2);
  m.at(0, 0) = 1;               // lambda1 -> lambda - d0ram/4
  m.at(3, 0) = Rational(-1, 4);
  m.at(1, 1) = 1;               // D -> d0'
  return LinearMap{Basis::A5bar, Basis::R6tilde, m};
}

AnticlassCertificate antiramification_certificate(
    const std::optional<DivisorClass>& n0prime_override) {
  AnticlassCertificate cert{DivisorClass(Basis::R6tilde), DivisorClass(Basis::R6tilde),
                            Rational(0), Rational(0), {}};
  const DivisorClass& n0prime = n0prime_override ? *n0prime_override : known("N0prime");
  cert.pullback_n0prime = prym_pullback()(n0prime);
  cert.trace.push_back("P*(N0prime) = " + cert.pullback_n0prime.str());

  DivisorClass utilde = forgetful_pullback()(known("GP_6_4"));
  cert.trace.push_back("Utilde = pi*(GP_6_4) = " + utilde.str());

  cert.residual = cert.pullback_n0prime - known("Qtilde").scaled(Rational(2)) - utilde;
  cert.trace.push_back("P*(N0prime) - 2 Qtilde - Utilde = " + cert.residual.str());

  cert.boundary_multiplicity = Rational(jacobian_multiplicity_chain().boundary_coefficient);
  DivisorClass expected =
      DivisorClass::unit(Basis::R6tilde, 2).scaled(cert.boundary_multiplicity);
  if (!(cert.residual == expected))
    throw CertificateFailure("antiramification: residual " + cert.residual.str() +
                             " != " + expected.str());

  // With the d0'' coefficient of Qtilde left as an unknown -c, the residual's
  // d0'' entry is 2c + 12; matching the multiplicity 20 pins c.
  Rational base = cert.pullback_n0prime.coeff("delta0''") - utilde.coeff("delta0''");
  cert.solved_c = (cert.boundary_multiplicity - base) / Rational(2);
  cert.trace.push_back("solving 2c + " + base.str() + " = " +
                       cert.boundary_multiplicity.str() + " gives c = " + cert.solved_c.str());
  return cert;
}

PrymPushforward prym_pushforward() {
  // Unknown pushforwards of lambda and d0ram, expanded over {lambda1, D}.
  // Row 1: (pushforward o pullback) lambda1 = 27 lambda1.
  // Row 2: pushforward of the ramification class = 6 N0prime, with the
  //        d0' and d0'' pushforwards known: 27 D and 0.
  RatMatrix system(2, 2);
  system.at(0, 0) = 1;
  system.at(0, 1) = Rational(-1, 4);
  system.at(1, 0) = 7;
  system.at(1, 1) = Rational(-3, 2);

  DivisorClass six_n0prime = known("N0prime").scaled(Rational(6));
  std::vector<Rational> rhs_lambda = {Rational(27), six_n0prime.coeffs[0]};
  std::vector<Rational> rhs_d = {Rational(0), six_n0prime.coeffs[1] + Rational(27)};

  std::vector<Rational> sol_lambda = system.solve(rhs_lambda);  // SingularSystem guarded
  std::vector<Rational> sol_d = system.solve(rhs_d);

  PrymPushforward out{DivisorClass(Basis::A5bar), DivisorClass(Basis::A5bar),
                      DivisorClass(Basis::A5bar), DivisorClass(Basis::A5bar),
                      LinearMap{Basis::R6tilde, Basis::A5bar, RatMatrix(2, 4)},
                      false, false, {}};
  out.lambda = DivisorClass(Basis::A5bar, {sol_lambda[0], sol_d[0]});
  out.delta0_prime = DivisorClass(Basis::A5bar, {Rational(0), Rational(27)});
  out.delta0_dblprime = DivisorClass(Basis::A5bar);
  out.delta0_ram = DivisorClass(Basis::A5bar, {sol_lambda[1], sol_d[1]});
  out.trace.push_back("P_*(lambda) = " + out.lambda.str());
  out.trace.push_back("P_*(delta0') = " + out.delta0_prime.str());
  out.trace.push_back("P_*(delta0'') = " + out.delta0_dblprime.str());
  out.trace.push_back("P_*(delta0ram) = " + out.delta0_ram.str());

  DivisorClass expect_lambda = DivisorClass(Basis::A5bar, {Rational(486), Rational(-57)});
  DivisorClass expect_ram = DivisorClass(Basis::A5bar, {Rational(1836), Rational(-228)});
  if (!(out.lambda == expect_lambda) || !(out.delta0_ram == expect_ram))
    throw CertificateFailure("prym_pushforward: solved classes do not match " +
                             expect_lambda.str() + " / " + expect_ram.str());

  const DivisorClass* cols[4] = {&out.lambda, &out.delta0_prime, &out.delta0_dblprime,
                                 &out.delta0_ram};
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 2; ++r) out.map.m.at(r, c) = cols[c]->coeffs[r];

  RatMatrix round_trip = out.map.m * prym_pullback().m;
  out.degree_identity = round_trip == RatMatrix::identity(2).scaled(Rational(27));
  out.trace.push_back("pushforward o pullback = 27 id: " +
                      std::string(out.degree_identity ? "yes" : "NO"));

  out.ramified_consistency = out.delta0_ram == known("Dram").scaled(Rational(3));
  out.trace.push_back("P_*(delta0ram) = 3 [Dram]: " +
                      std::string(out.ramified_consistency ? "yes" : "NO"));
  return out;
}

SlopeValue slope(const DivisorClass& c) {
  if (c.basis != Basis::A5bar) throw DimensionMismatch("slope: expected an A5bar class");
  const Rational& a = c.coeffs[0];
  Rational b = -c.coeffs[1];
  SlopeValue s{Rational(0), a.sign() > 0 && b.sign() > 0, b.is_zero()};
  if (!s.infinite) s.value = a / b;
  return s;
}

Rational testcurve_pairing(const DivisorClass& c, const TestCurve& R) {
  if (c.basis != Basis::R6tilde)
    throw DimensionMismatch("testcurve_pairing: expected an R6tilde class");
  return R.dot_lambda * c.coeffs[0] + R.dot_delta0_prime * c.coeffs[1] +
         R.dot_delta0_dblprime * c.coeffs[2] + R.dot_delta0_ram * c.coeffs[3];
}

SlopeCertificate slope_certificate(const TestCurve& R) {
  SlopeCertificate cert;
  auto require = [&](const char* what, const Rational& got, const Rational& want) {
    if (got != want)
      throw CertificateFailure(std::string("slope certificate: ") + what + " = " + got.str() +
                               ", expected " + want.str());
  };

  cert.pairing_qtilde = testcurve_pairing(known("Qtilde"), R);
  cert.trace.push_back("R . Qtilde = " + cert.pairing_qtilde.str());
  require("R . Qtilde", cert.pairing_qtilde, Rational(-2));

  DivisorClass pi_delta0 = forgetful_pullback()(DivisorClass::unit(Basis::M6bar, 1));
  cert.pairing_pi_delta0 = testcurve_pairing(pi_delta0, R);
  cert.trace.push_back("R . pi*(delta0) = " + cert.pairing_pi_delta0.str());
  require("R . pi*(delta0)", cert.pairing_pi_delta0, Rational(47));

  cert.pairing_utilde = testcurve_pairing(known("Utilde"), R);
  cert.trace.push_back("R . Utilde = " + cert.pairing_utilde.str());
  require("R . Utilde", cert.pairing_utilde, Rational(0));

  DivisorClass branch = known("Qtilde").scaled(Rational(2)) + known("Utilde") +
                        DivisorClass::unit(Basis::R6tilde, 2).scaled(Rational(20));
  cert.pairing_branch = testcurve_pairing(branch, R);
  Rational via_pullback = testcurve_pairing(prym_pullback()(known("N0prime")), R);
  cert.trace.push_back("R . (2 Qtilde + Utilde + 20 delta0'') = " + cert.pairing_branch.str() +
                       " (as R . P*(N0prime): " + via_pullback.str() + ")");
  require("R . branch class", cert.pairing_branch, Rational(-4));
  require("R . P*(N0prime)", via_pullback, Rational(-4));

  cert.pairing_hodge =
      testcurve_pairing(prym_pullback()(DivisorClass::unit(Basis::A5bar, 0)), R);
  cert.trace.push_back("R . P*(lambda1) = " + cert.pairing_hodge.str());
  require("R . P*(lambda1)", cert.pairing_hodge, Rational(9, 2));

  // Rigidity: an effective class (N0prime - eps lambda1) off the branch
  // support would pair as -4 - (9/2) eps < 0 against the pencil for every
  // eps >= 0, which is impossible; so no effective class undercuts the slope
  // and multiples of N0prime are the only classes attaining it.
  cert.trace.push_back("R . P*(N0prime - eps lambda1) = " + cert.pairing_branch.str() + " - " +
                       cert.pairing_hodge.str() + " eps < 0 for all eps >= 0");

  SlopeValue s = slope(known("N0prime"));
  cert.n0prime_slope = s.value;
  cert.trace.push_back("slope(N0prime) = " + cert.n0prime_slope.str());
  require("slope(N0prime)", cert.n0prime_slope, Rational(54, 7));

  // Movable classes: R is a moving pencil, so R . P*(N0prime + eps lambda1)
  // = -4 + (9/2) eps must be >= 0.
  cert.moving_eps_min = -cert.pairing_branch / cert.pairing_hodge;
  const DivisorClass& n0 = known("N0prime");
  cert.moving_slope_bound = (n0.coeffs[0] + cert.moving_eps_min) / -n0.coeffs[1];
  cert.trace.push_back("moving classes need eps >= " + cert.moving_eps_min.str() +
                       ", so moving slope >= " + cert.moving_slope_bound.str());
  require("eps lower bound", cert.moving_eps_min, Rational(8, 9));
  require("moving slope bound", cert.moving_slope_bound, Rational(70, 9));
  return cert;
}

TautCertificate taut_class_certificate() {
  // G26taut coordinates: lambda, a, b, c1V, delta0', delta0'', delta0ram.
  DivisorClass c1_v2(Basis::G26taut,
                     {Rational(1), Rational(2), Rational(-1), Rational(0), Rational(0),
                      Rational(0), Rational(0)});
  DivisorClass c1_sym2_v1(Basis::G26taut,
                          {Rational(0), Rational(0), Rational(0), Rational(4), Rational(0),
                           Rational(0), Rational(0)});
  DivisorClass c1_line_sq(Basis::G26taut,
                          {Rational(2), Rational(1), Rational(-1), Rational(0), Rational(0),
                           Rational(0), Rational(-1, 2)});

  TautCertificate cert{DivisorClass(Basis::G26taut), DivisorClass(Basis::R6tilde),
                       DivisorClass(Basis::R6tilde), Rational(0), {}};
  cert.degeneracy_class = c1_v2 - c1_sym2_v1 - c1_line_sq;
  cert.trace.push_back("c1(V2) - c1(Sym^2 V1) - 2 c1(E) = " + cert.degeneracy_class.str());

  cert.cover_degree = castelnuovo_count(6, 2, 6);
  if (cert.cover_degree != Rational(5))
    throw CertificateFailure("taut certificate: net count " + cert.cover_degree.str() +
                             " != 5");
  cert.trace.push_back("degree of the net cover = " + cert.cover_degree.str());

  // Pushforward down the cover: classes pulled back from the base scale by
  // the degree; the tautological classes push by the fixed rules, with
  // pi*(delta0) expanded in the R6tilde basis.
  RatMatrix sp(4, 7);
  auto col = [&](int c, std::initializer_list<Rational> v) {
    int r = 0;
    for (auto& x : v) sp.at(r++, c) = x;
  };
  Rational d = cert.cover_degree;
  col(0, {d, Rational(0), Rational(0), Rational(0)});             // lambda
  col(1, {Rational(-48), Rational(7), Rational(7), Rational(14)});  // a
  col(2, {Rational(36), Rational(-3), Rational(-3), Rational(-6)}); // b
  col(3, {Rational(-22), Rational(3), Rational(3), Rational(6)});   // c1V
  col(4, {Rational(0), d, Rational(0), Rational(0)});             // delta0'
  col(5, {Rational(0), Rational(0), d, Rational(0)});             // delta0''
  col(6, {Rational(0), Rational(0), Rational(0), d});             // delta0ram
  LinearMap sigma_push{Basis::G26taut, Basis::R6tilde, sp};

  cert.pushed = sigma_push(cert.degeneracy_class);
  cert.trace.push_back("pushed class = " + cert.pushed.str());

  cert.target = known("Z").scaled(cert.cover_degree);
  cert.trace.push_back("5 [Z] = " + cert.target.str());
  if (!(cert.pushed == cert.target))
    throw CertificateFailure("taut certificate: residual " +
                             (cert.pushed - cert.target).str());
  return cert;
}

long long chi_symmetric_product(int g, int d) {
  Rational c = binomial_q(2 * g - 2, d);
  return (d % 2 == 0 ? c : -c).to_int();
}

MultiplicityChain jacobian_multiplicity_chain() {
  MultiplicityChain m{};
  m.chi_sym4 = chi_symmetric_product(5, 4);  // 70
  const int genus_w14 = 11;   // the curve of degree-4 pencils on a general genus-5 curve
  m.chi_w14 = 2 - 2 * genus_w14;             // -20
  m.chi_c14 = 2 * m.chi_w14;                 // the pencil locus upstairs is a double cover
  m.chi_w4 = m.chi_sym4 - m.chi_c14 + m.chi_w14;
  m.chi_theta_generic = factorial_q(5).to_int();  // smooth theta divisor, genus 5
  const int quintic_degree = 5;  // tangent cones trace a double cover of a plane quintic
  m.nodes = 2 * quintic_degree;
  m.jacobian_multiplicity = m.chi_theta_generic - m.chi_w4 + m.nodes;
  m.boundary_coefficient = m.jacobian_multiplicity / 2;
  return m;
}

Rational castelnuovo_count(int g, int r, int d) {
  long long rho = g - (long long)(r + 1) * (g - d + r);
  if (rho != 0) throw Error("castelnuovo_count: Brill-Noether number is not zero");
  Rational n = factorial_q(g);
  for (int i = 0; i <= r; ++i) n *= factorial_q(i) / factorial_q(g - d + r + i);
  return n;
}

}  // namespace thetadiv
