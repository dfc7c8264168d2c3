#include <doctest.h>

#include <random>

#include "kashina/gaussrat.hpp"

using namespace kashina;

namespace {

GaussRat rnd(std::mt19937& gen) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  return GaussRat::make(num(gen), den(gen), num(gen), den(gen));
}

}  // namespace

TEST_CASE("basic arithmetic") {
  GaussRat one(1), i = GaussRat::i();
  // (1+i)(1-i) = 2
  CHECK((one + i) * (one - i) == GaussRat(2));
  // 1/2 (1+i) + 1/2 (1-i) = 1
  CHECK(GaussRat::half() * (one + i) + GaussRat::half() * (one - i) == one);
  // 1 / (1+i) = (1-i)/2
  CHECK(one / (one + i) == GaussRat::half() * (one - i));
  CHECK_THROWS_AS(one / GaussRat(0), std::domain_error);
  CHECK(arith(ArithOp::mul, one + i, one - i) == GaussRat(2));
}

TEST_CASE("canonical form") {
  GaussRat a = GaussRat::make(2, -4, -6, 9);
  CHECK(a.re_num() == -1);
  CHECK(a.re_den() == 2);
  CHECK(a.im_num() == -2);
  CHECK(a.im_den() == 3);
  CHECK(GaussRat::make(0, 7, 0, -3) == GaussRat(0));
}

TEST_CASE("xi powers") {
  CHECK(xi_power(0) == GaussRat(1));
  CHECK(xi_power(1) == GaussRat::i());
  CHECK(xi_power(2) == GaussRat(-1));
  CHECK(xi_power(3) == -GaussRat::i());
  CHECK(xi_power(-1) == -GaussRat::i());
  for (long n = 0; n < 8; ++n)
    for (long m = 0; m < 8; ++m) CHECK(xi_power(n) * xi_power(m) == xi_power(n + m));
}

TEST_CASE("field axioms on random elements") {
  std::mt19937 gen(20240311);
  for (int trial = 0; trial < 300; ++trial) {
    GaussRat a = rnd(gen), b = rnd(gen), c = rnd(gen);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inv() == GaussRat(1));
    CHECK(a - a == GaussRat(0));
  }
}

TEST_CASE("text form round trip") {
  std::mt19937 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    GaussRat a = rnd(gen);
    CHECK(GaussRat::parse(a.str()) == a);
    CHECK(GaussRat::parse(a.str()).str() == a.str());
  }
  CHECK(GaussRat(0).str() == "0/1+0/1*i");
  CHECK(GaussRat::parse("-1/2+3/4*i") == GaussRat::make(-1, 2, 3, 4));
  CHECK(!GaussRat::try_parse("1/2"));
  CHECK(!GaussRat::try_parse("1/0+0/1*i"));
}
