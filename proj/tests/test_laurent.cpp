#include "braidrot/laurent.hpp"

#include <doctest.h>

#include <random>
#include <stdexcept>

using braidrot::Int;
using braidrot::LaurentPoly;

TEST_CASE("laurent: canonical text form") {
  LaurentPoly p;
  p.add_term(3, 1);
  p.add_term(1, 2);
  p.add_term(0, -1);
  p.add_term(-2, -1);
  CHECK(p.to_string() == "x^3 + 2*x - 1 - x^-2");

  CHECK(LaurentPoly::zero().to_string() == "0");
  CHECK(LaurentPoly::one().to_string() == "1");
  CHECK(LaurentPoly::monomial(1, 1).to_string() == "x");
  CHECK(LaurentPoly::monomial(-1, 1).to_string() == "-x");
  CHECK(LaurentPoly::monomial(1, -1).to_string() == "x^-1");
  CHECK(LaurentPoly::monomial(-3, 0).to_string() == "-3");
  CHECK(LaurentPoly::monomial(2, -5).to_string() == "2*x^-5");
}

TEST_CASE("laurent: parsing round trips") {
  const char* samples[] = {
      "0", "1", "-1", "x", "-x", "x^-1", "x^3 + 2*x - 1 - x^-2",
      "5*x^10 - 4*x^-10", "x^2 + x + 1",
  };
  for (const char* s : samples) {
    auto p = LaurentPoly::from_string(s);
    CHECK(p.to_string() == s);
  }
  CHECK(LaurentPoly::from_string("2*x + x") == LaurentPoly::monomial(3, 1));
  CHECK(LaurentPoly::from_string("x - x") == LaurentPoly::zero());
  CHECK_THROWS_AS((void)LaurentPoly::from_string(""), std::invalid_argument);
  CHECK_THROWS_AS((void)LaurentPoly::from_string("x^"), std::invalid_argument);
  CHECK_THROWS_AS((void)LaurentPoly::from_string("2x"), std::invalid_argument);
  CHECK_THROWS_AS((void)LaurentPoly::from_string("y + 1"),
                  std::invalid_argument);
}

TEST_CASE("laurent: ring arithmetic") {
  auto x = LaurentPoly::monomial(1, 1);
  auto xinv = LaurentPoly::monomial(1, -1);
  CHECK(x * xinv == LaurentPoly::one());
  CHECK((x + xinv) * (x - xinv) ==
        LaurentPoly::monomial(1, 2) - LaurentPoly::monomial(1, -2));
  CHECK(x - x == LaurentPoly::zero());
  CHECK((-x).to_string() == "-x");

  std::mt19937 rng(7);
  std::uniform_int_distribution<int> exp_d(-6, 6), coeff_d(-5, 5);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 5; ++t) p.add_term(exp_d(rng), coeff_d(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK((a - b) + b == a);
  }
}

TEST_CASE("laurent: evaluation and derivative at one") {
  auto p = LaurentPoly::from_string("x^3 + 2*x - 1 - x^-2");
  CHECK(p.value_at_one() == Int(1));       // 1 + 2 - 1 - 1
  CHECK(p.derivative_at_one() == Int(7));  // 3 + 2 - 0 + 2

  // product rule pins the derivative against an independent identity
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> exp_d(-4, 4), coeff_d(-3, 3);
  auto random_poly = [&] {
    LaurentPoly p;
    for (int t = 0; t < 4; ++t) p.add_term(exp_d(rng), coeff_d(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto f = random_poly(), g = random_poly();
    CHECK((f * g).derivative_at_one() ==
          f.derivative_at_one() * g.value_at_one() +
              f.value_at_one() * g.derivative_at_one());
  }
}

TEST_CASE("laurent: big coefficients and exponents stay exact") {
  auto p = LaurentPoly::monomial(Int("123456789012345678901234567890"),
                                 Int("1000000000000"));
  auto q = p * p;
  CHECK(q.coeff(Int("2000000000000")) ==
        Int("123456789012345678901234567890") *
            Int("123456789012345678901234567890"));
  CHECK(q.to_string() ==
        "15241578753238836750495351562536198787501905199875019052100"
        "*x^2000000000000");
}
