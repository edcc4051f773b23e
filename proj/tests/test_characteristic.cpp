#include <doctest.h>

#include "thetadiv/characteristic.hpp"
#include "thetadiv/errors.hpp"

using namespace thetadiv;

TEST_CASE("parity is the pairing of eps and delta mod 2") {
  CHECK(Characteristic({0}, {0}).parity() == 0);
  CHECK(Characteristic({1}, {1}).parity() == 1);
  CHECK(Characteristic({1}, {0}).parity() == 0);
  CHECK(Characteristic({1, 1}, {1, 1}).parity() == 0);
  CHECK(Characteristic({1, 0}, {1, 1}).parity() == 1);
}

TEST_CASE("parse and print") {
  Characteristic c = Characteristic::parse("0101|0011");
  CHECK(c.genus() == 4);
  CHECK(c.str() == "0101|0011");
  CHECK(c.eps == std::vector<uint8_t>{0, 1, 0, 1});
  CHECK(c.delta == std::vector<uint8_t>{0, 0, 1, 1});
  CHECK_THROWS_AS(Characteristic::parse("0101"), ParseError);
  CHECK_THROWS_AS(Characteristic::parse("01|2"), ParseError);
  CHECK_THROWS_AS(Characteristic::parse("01|0"), DimensionMismatch);
}

TEST_CASE("enumeration counts match 2^{g-1}(2^g +- 1)") {
  // g = 1: the three even characteristics are (0,0), (0,1), (1,0)
  auto even1 = enumerate_characteristics(1, Parity::Even);
  REQUIRE(even1.size() == 3);
  for (auto& c : even1) CHECK(c.is_even());

  CHECK(enumerate_characteristics(2, Parity::Even).size() == 10);
  CHECK(enumerate_characteristics(3, Parity::Even).size() == 36);
  CHECK(enumerate_characteristics(4, Parity::Even).size() == 136);
  CHECK(enumerate_characteristics(4, Parity::Odd).size() == 120);

  for (int g = 1; g <= 4; ++g) {
    size_t even = enumerate_characteristics(g, Parity::Even).size();
    size_t odd = enumerate_characteristics(g, Parity::Odd).size();
    CHECK(even + odd == (size_t)1 << (2 * g));
  }
}
