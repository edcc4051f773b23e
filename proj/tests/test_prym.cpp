#include <doctest.h>

#include "thetadiv/errors.hpp"
#include "thetadiv/prym.hpp"

using namespace thetadiv;

namespace {

DivisorClass r6(std::initializer_list<Rational> c) {
  return DivisorClass(Basis::R6tilde, std::vector<Rational>(c));
}

}  // namespace

TEST_CASE("the fixed class table") {
  CHECK(known("N0prime").coeffs == std::vector<Rational>{108, -14});
  CHECK(known("Dram").coeffs == std::vector<Rational>{612, -76});
  CHECK(known("GP_6_4").coeffs == std::vector<Rational>{94, -12, -50, -78, -88});
  CHECK(known("GP_6_5").coeffs == std::vector<Rational>{520, -64, -248, -360, -392});
  CHECK(known("Qtilde").coeffs ==
        std::vector<Rational>{7, -1, -4, Rational(-3, 2)});
  CHECK(known("Qtilde").coeff("delta0''") == Rational(-4));
  CHECK_THROWS(known("nope"));

  // the degeneracy class is the difference of the two bundle classes
  DivisorClass z = known("c1N2") - known("c1N1").scaled(Rational(6));
  CHECK(z == known("Z"));
}

TEST_CASE("forgetful pullback") {
  DivisorClass delta0 = DivisorClass::unit(Basis::M6bar, 1);
  CHECK(forgetful_pullback()(delta0) == r6({0, 1, 1, 2}));

  DivisorClass lambda = DivisorClass::unit(Basis::M6bar, 0);
  CHECK(forgetful_pullback()(lambda) == r6({1, 0, 0, 0}));

  ForgetfulResult gp = forgetful_pullback_apply(known("GP_6_4"));
  CHECK(gp.cls == r6({94, -12, -12, -24}));
  CHECK(gp.dropped_higher_boundary);  // the delta_{1,2,3} terms restrict to zero
  CHECK(gp.cls == known("Utilde"));

  ForgetfulResult pure = forgetful_pullback_apply(
      DivisorClass(Basis::M6bar, {Rational(3), Rational(-1), Rational(0), Rational(0),
                                  Rational(0)}));
  CHECK_FALSE(pure.dropped_higher_boundary);
}

TEST_CASE("prym pullback") {
  CHECK(prym_pullback()(DivisorClass::unit(Basis::A5bar, 0)) ==
        r6({1, 0, 0, Rational(-1, 4)}));
  CHECK(prym_pullback()(DivisorClass::unit(Basis::A5bar, 1)) == r6({0, 1, 0, 0}));
  CHECK(prym_pullback()(known("N0prime")) == r6({108, -14, 0, -27}));
}

TEST_CASE("antiramification certificate") {
  AnticlassCertificate cert = antiramification_certificate();
  CHECK(cert.residual == r6({0, 0, 20, 0}));
  CHECK(cert.boundary_multiplicity == Rational(20));
  CHECK(cert.solved_c == Rational(4));
  CHECK_FALSE(cert.trace.empty());

  // negative control: a broken input class must fail loudly
  CHECK_THROWS_AS(antiramification_certificate(DivisorClass(Basis::A5bar)),
                  CertificateFailure);
}

TEST_CASE("prym pushforward solve") {
  PrymPushforward p = prym_pushforward();
  CHECK(p.lambda == DivisorClass(Basis::A5bar, {Rational(486), Rational(-57)}));
  CHECK(p.lambda.coeffs[0] == Rational(18 * 27));
  CHECK(p.delta0_ram == DivisorClass(Basis::A5bar, {Rational(1836), Rational(-228)}));
  CHECK(p.delta0_ram.coeffs[0] == Rational(4 * 17 * 27));
  CHECK(p.delta0_prime == DivisorClass(Basis::A5bar, {Rational(0), Rational(27)}));
  CHECK(p.delta0_dblprime.is_zero());
  CHECK(p.degree_identity);
  CHECK(p.ramified_consistency);
  CHECK(p.delta0_ram == known("Dram").scaled(Rational(3)));
}

TEST_CASE("slopes") {
  SlopeValue s = slope(known("N0prime"));
  CHECK(s.value == Rational(54, 7));
  CHECK(s.effective_shape);
  CHECK_FALSE(s.infinite);

  CHECK(slope(known("Dram")).value == Rational(153, 19));

  SlopeValue ref = slope(DivisorClass(Basis::A5bar, {Rational(6), Rational(-1)}));
  CHECK(ref.value == Rational(6));

  SlopeValue anti = slope(DivisorClass(Basis::A5bar, {Rational(10), Rational(3)}));
  CHECK_FALSE(anti.effective_shape);
  CHECK(anti.value == Rational(-10, 3));

  SlopeValue inf = slope(DivisorClass(Basis::A5bar, {Rational(5), Rational(0)}));
  CHECK(inf.infinite);
}

TEST_CASE("test curve pairings") {
  CHECK(testcurve_pairing(known("Qtilde")) == Rational(-2));
  CHECK(testcurve_pairing(forgetful_pullback()(DivisorClass::unit(Basis::M6bar, 1))) ==
        Rational(47));
  CHECK(testcurve_pairing(known("Utilde")) == Rational(0));
  CHECK(testcurve_pairing(prym_pullback()(DivisorClass::unit(Basis::A5bar, 0))) ==
        Rational(9, 2));
}

TEST_CASE("slope certificate") {
  SlopeCertificate cert = slope_certificate();
  CHECK(cert.pairing_branch == Rational(-4));
  CHECK(cert.pairing_hodge == Rational(9, 2));
  CHECK(cert.pairing_qtilde == Rational(-2));
  CHECK(cert.pairing_pi_delta0 == Rational(47));
  CHECK(cert.pairing_utilde == Rational(0));
  CHECK(cert.n0prime_slope == Rational(54, 7));
  CHECK(cert.moving_eps_min == Rational(8, 9));
  CHECK(cert.moving_slope_bound == Rational(70, 9));

  // negative control: perturbing one intersection number breaks step (i)
  TestCurve broken;
  broken.dot_delta0_prime = 34;
  CHECK_THROWS_AS(slope_certificate(broken), CertificateFailure);
}

TEST_CASE("tautological pushforward certificate") {
  TautCertificate cert = taut_class_certificate();
  CHECK(cert.degeneracy_class ==
        DivisorClass(Basis::G26taut, {Rational(-1), Rational(1), Rational(0), Rational(-4),
                                      Rational(0), Rational(0), Rational(1, 2)}));
  CHECK(cert.pushed == r6({35, -5, -5, Rational(-15, 2)}));
  CHECK(cert.pushed == cert.target);
  CHECK(cert.target == known("Z").scaled(Rational(5)));
  CHECK(cert.cover_degree == Rational(5));
}

TEST_CASE("castelnuovo counts") {
  CHECK(castelnuovo_count(6, 2, 6) == Rational(5));
  CHECK(castelnuovo_count(4, 1, 3) == Rational(2));   // trigonal count in genus 4
  CHECK(castelnuovo_count(6, 1, 4) == Rational(5));   // degree-4 pencils in genus 6
  CHECK_THROWS(castelnuovo_count(6, 2, 7));           // nonzero Brill-Noether number
}

TEST_CASE("symmetric-product Euler characteristics") {
  // generating function (1 - t)^{2g-2} at g = 5
  CHECK(chi_symmetric_product(5, 0) == 1);
  CHECK(chi_symmetric_product(5, 1) == -8);  // = chi of the curve, 2 - 2g
  CHECK(chi_symmetric_product(5, 2) == 28);
  CHECK(chi_symmetric_product(5, 3) == -56);
  CHECK(chi_symmetric_product(5, 4) == 70);
  for (int g = 2; g <= 6; ++g) CHECK(chi_symmetric_product(g, 1) == 2 - 2 * g);
}

TEST_CASE("jacobian multiplicity chain") {
  MultiplicityChain m = jacobian_multiplicity_chain();
  CHECK(m.chi_sym4 == 70);
  CHECK(m.chi_w14 == -20);
  CHECK(m.chi_c14 == -40);
  CHECK(m.chi_w4 == 90);
  CHECK(m.chi_theta_generic == 120);
  CHECK(m.nodes == 10);
  CHECK(m.jacobian_multiplicity == 40);
  CHECK(m.boundary_coefficient == 20);
}

TEST_CASE("divisor class formatting") {
  CHECK(known("N0prime").str() == "108 lambda1 - 14 D");
  CHECK(known("Qtilde").str() == "7 lambda - delta0' - 4 delta0'' - 3/2 delta0ram");
  CHECK(DivisorClass(Basis::A5bar).str() == "0");
}
