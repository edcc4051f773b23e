#include <doctest.h>

#include "thetadiv/errors.hpp"
#include "thetadiv/graded_class.hpp"
#include "thetadiv/rng.hpp"

using namespace thetadiv;

TEST_CASE("pushforward evaluation rules") {
  for (int g = 2; g <= 6; ++g) {
    CHECK(pushforward(GradedClass::term(g, g, 0, 1)) == BaseClass(factorial_q(g), 0, 0));
    CHECK(pushforward(GradedClass::term(g, g - 1, 1, 1)) == BaseClass());
    CHECK(pushforward(GradedClass::term(g, g + 1, 0, 1)) ==
          BaseClass(0, factorial_q(g + 1) / Rational(2), 0));
    CHECK(pushforward(GradedClass::term(g, g + 2, 0, 1)) ==
          BaseClass(0, 0, factorial_q(g + 2) / Rational(8)));
    CHECK(pushforward(GradedClass::term(g, g + 1, 1, 1)) ==
          BaseClass(0, 0, factorial_q(g + 1) / Rational(2)));
  }
  CHECK_THROWS_AS(pushforward(GradedClass::term(4, 7, 0, 1)), UnsupportedPower);
  CHECK_THROWS_AS(pushforward(GradedClass::term(4, 6, 1, 1)), DegreeOverflow);
  // a theta power below g dies before any degree question arises
  CHECK(pushforward(GradedClass::term(4, 3, 5, 1)) == BaseClass());
}

TEST_CASE("pushforward is linear and respects the projection formula") {
  Rng rng(31);
  int g = 5;
  // random class whose pushforward degree stays within image_cap
  auto random_class = [&](int image_cap) {
    GradedClass x(g);
    for (int t = 0; t < 4; ++t) {
      int a = (int)rng.range(0, g + 2);
      Rational coeff(rng.range(-9, 9), rng.range(1, 3));
      if (a < g) {
        x.add(a, (int)rng.range(0, 2), 0, coeff);
        continue;
      }
      int max_b = image_cap - (a - g);
      if (max_b < 0) continue;
      x.add(a, (int)rng.range(0, max_b), 0, coeff);
    }
    return x;
  };
  for (int trial = 0; trial < 100; ++trial) {
    GradedClass x = random_class(2);
    GradedClass y = random_class(2);
    BaseClass sum = pushforward(x + y);
    BaseClass parts = pushforward(x) + pushforward(y);
    CHECK(sum == parts);

    Rational s(rng.range(-5, 5), rng.range(1, 2));
    CHECK(pushforward(x.scaled(s)) == pushforward(x).scaled(s));
  }
  // projection formula: multiplying by lambda1 commutes with pushforward
  for (int trial = 0; trial < 50; ++trial) {
    GradedClass x = random_class(1);
    GradedClass lam = GradedClass::term(g, 0, 1, 1);
    BaseClass lhs = pushforward(x * lam);
    BaseClass rhs = pushforward(x);
    CHECK(lhs.coeff(1) == rhs.coeff(0));
    CHECK(lhs.coeff(2) == rhs.coeff(1));
  }
}

TEST_CASE("lambda2 rewriting is eager") {
  GradedClass x(4);
  x.add(2, 0, 1, Rational(1));  // T^2 l2 -> T^2 l1^2 / 2
  GradedClass y = GradedClass::term(4, 2, 2, Rational(1, 2));
  CHECK(x == y);
  GradedClass z(4);
  z.add(0, 1, 2, Rational(8));  // l1 l2^2 -> 2 l1^5
  CHECK(z == GradedClass::term(4, 0, 5, Rational(2)));
}

TEST_CASE("top Chern expansion has the expected three terms") {
  GradedClass c4 = chern_top_omega_theta(4);
  GradedClass expect = GradedClass::term(4, 4, 0, 1) + GradedClass::term(4, 3, 1, 1) +
                       GradedClass::term(4, 2, 2, Rational(1, 2));
  CHECK(c4 == expect);
}

TEST_CASE("class of the singular locus downstairs") {
  for (int g = 2; g <= 12; ++g) {
    Rational expect = factorial_q(g) * Rational(g + 3) / Rational(2);
    CHECK(n0_lambda_coefficient(g) == expect);
    // equivalently (g+1)!/2 + g!
    CHECK(n0_lambda_coefficient(g) ==
          factorial_q(g + 1) / Rational(2) + factorial_q(g));
  }
}

TEST_CASE("Hessian-degeneracy class over the whole singular locus") {
  CHECK(class_n0_hessian(4).coeff(2) == Rational(816));
  CHECK(class_n0_hessian(4).coeff(2) == Rational(3) * Rational(272));
  CHECK(class_n0_hessian(5).coeff(2) == Rational(6210));
  for (int g = 4; g <= 12; ++g) CHECK_NOTHROW(class_n0_hessian(g));  // internal closed-form check
  CHECK_THROWS(class_n0_hessian(3));
}

TEST_CASE("two-torsion Hessian class and its audit factors") {
  ThetanullAudit a2 = class_thetanull_hessian_audit(2);
  CHECK(a2.even_count == Rational(10));
  CHECK(a2.constant_weight == Rational(1, 2));
  CHECK(a2.hessian_weight == Rational(3));
  CHECK(a2.cls.coeff(2) == Rational(15));

  CHECK(class_thetanull_hessian(4).coeff(2) == Rational(272));
  CHECK(class_thetanull_hessian(5).coeff(2) == Rational(1188));
  CHECK(class_thetanull_hessian(5).coeff(2) == Rational(27 * 44));
}

TEST_CASE("the non-ordinary locus class") {
  CHECK(class_nonordinary(4).coeff(2) == Rational(272));
  CHECK(class_nonordinary(5).coeff(2) == Rational(2511));
  CHECK(class_nonordinary(5).coeff(2) - class_thetanull_hessian(5).coeff(2) ==
        Rational(27 * 49));
  for (int g = 4; g <= 12; ++g) {
    Rational gap = class_nonordinary(g).coeff(2) - class_thetanull_hessian(g).coeff(2);
    CHECK(gap.sign() >= 0);
    CHECK((gap.is_zero()) == (g == 4));
  }
}

TEST_CASE("modular weight bookkeeping") {
  ModularWeights w4 = modular_weights(4);
  CHECK(w4.weight_theta_product == Rational(68));
  CHECK(w4.weight_n0prime == Rational(8));
  CHECK(w4.split_consistent);

  ModularWeights w5 = modular_weights(5);
  CHECK(w5.weight_theta_product == Rational(264));
  CHECK(w5.weight_n0prime == Rational(108));

  for (int g = 2; g <= 12; ++g) CHECK(modular_weights(g).split_consistent);

  Genus4Forms f = genus4_complete_intersection();
  CHECK(f.weight_form == Rational(8));
  CHECK(f.weight_det_hessian == Rational(34));
  CHECK(f.intersection_class == Rational(272));
  CHECK(det_hessian_weight(Rational(1, 2), 4) == Rational(4));  // (g+4)/2 at g = 4
}
