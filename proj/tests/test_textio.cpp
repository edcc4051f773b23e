#include <doctest.h>

#include <sstream>

#include "thetadiv/errors.hpp"
#include "thetadiv/rng.hpp"
#include "thetadiv/textio.hpp"

using namespace thetadiv;
using cd = std::complex<double>;

TEST_CASE("complex values round-trip through the text form") {
  Rng rng(41);
  for (int i = 0; i < 50; ++i) {
    cd v{rng.real(-10, 10), rng.real(-10, 10)};
    CHECK(parse_complex(format_complex(v)) == v);
  }
  CHECK(parse_complex("{0, 1}") == cd(0, 1));
  CHECK(parse_complex("{-1.5e-3, 2}") == cd(-1.5e-3, 2));
  CHECK_THROWS_AS(parse_complex("1+2i"), ParseError);
  CHECK_THROWS_AS(parse_complex("{1}"), ParseError);
}

TEST_CASE("a full input document parses") {
  std::istringstream in(
      "# sample\n"
      "genus 2\n"
      "tau 1 1 {0, 1}\n"
      "tau 1 2 {0.25, 0.1}\n"
      "tau 2 2 {0, 2}\n"
      "z 1 {0.5, 0.5}\n"
      "char 10|01\n");
  ParsedInput p = parse_input(in);
  REQUIRE(p.tau);
  CHECK(p.tau->genus() == 2);
  CHECK(p.tau->tau()(0, 1) == cd(0.25, 0.1));
  CHECK(p.tau->tau()(1, 0) == cd(0.25, 0.1));
  REQUIRE(p.z);
  CHECK((*p.z)(0) == cd(0.5, 0.5));
  CHECK((*p.z)(1) == cd(0, 0));
  REQUIRE(p.chi);
  CHECK(p.chi->str() == "10|01");
}

TEST_CASE("candidates round-trip through serialization") {
  Rng rng(42);
  for (int trial = 0; trial < 10; ++trial) {
    Eigen::MatrixXcd t(2, 2);
    t(0, 0) = {rng.real(-0.3, 0.3), rng.real(0.9, 1.5)};
    t(1, 1) = {rng.real(-0.3, 0.3), rng.real(0.9, 1.5)};
    t(0, 1) = {rng.real(-0.1, 0.1), rng.real(-0.05, 0.05)};
    t(1, 0) = t(0, 1);
    SingCandidate c{PeriodMatrix(t), Eigen::VectorXcd(2), Provenance::TwoTorsion,
                    Characteristic({1, 0}, {0, 1}), std::nullopt};
    c.z = two_torsion_point(c.tau, *c.two_torsion_char);

    std::istringstream in(serialize_candidate(c));
    SingCandidate back = parse_input(in).candidate();
    CHECK(back.tau.tau() == c.tau.tau());
    CHECK(back.z == c.z);
    CHECK(back.provenance == Provenance::TwoTorsion);
    CHECK(*back.two_torsion_char == *c.two_torsion_char);
  }
}

TEST_CASE("rational matrix blocks parse") {
  std::istringstream in(
      "skew 4\n"
      "0 1/2 0 0\n"
      "-1/2 0 0 0\n"
      "0 0 0 3\n"
      "0 0 -3 0\n");
  ParsedInput p = parse_input(in);
  REQUIRE(p.rational_matrix);
  CHECK(p.rational_kind == "skew");
  CHECK(p.rational_matrix->at(0, 1) == Rational(1, 2));
  SkewMatrix m(*p.rational_matrix);
  CHECK(pfaffian(m) == Rational(3, 2));
}

TEST_CASE("parse errors are specific") {
  std::istringstream missing("genus 2\ntau 1 1 {0, 1}\ntau 2 2 {0, 1}\nz 1 {0, 0}\n");
  CHECK_THROWS_AS(parse_input(missing), ParseError);  // tau 1 2 absent

  std::istringstream unknown("frobnicate 3\n");
  CHECK_THROWS_AS(parse_input(unknown), ParseError);

  std::istringstream early("skew 4\n0 1 0 0\n");
  CHECK_THROWS_AS(parse_input(early), ParseError);

  std::istringstream zonly("z 1 {0, 0}\n");
  CHECK_THROWS_AS(parse_input(zonly), ParseError);
}

TEST_CASE("report records include every classification field") {
  SingReport r;
  r.value_norm = 1e-12;
  r.grad_norm = 2e-11;
  r.hess_singular_values = {3.0, 1.0};
  r.numeric_rank = 2;
  r.singular = true;
  std::string records = format_report_records(r);
  CHECK(records.find("value_norm") != std::string::npos);
  CHECK(records.find("numeric_rank 2") != std::string::npos);
  CHECK(records.find("singular 1") != std::string::npos);
  std::string table = format_report_table(r);
  CHECK(table.find("numeric rank") != std::string::npos);
}
