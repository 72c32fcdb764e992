#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hecke/json_io.hpp"
#include "hecke/poly.hpp"

using namespace hecke;

TEST_CASE("arithmetic and printing") {
  const IntPoly q = IntPoly::q();
  CHECK((q + 1) * (q + 1) == IntPoly{1, 2, 1});
  CHECK((q - 1) * (q + 1) == IntPoly{-1, 0, 1});
  CHECK(IntPoly{1, 1} - IntPoly{1, 1} == IntPoly());
  CHECK(IntPoly().is_zero());
  CHECK(IntPoly{0, 0, 3}.degree() == 2);
  CHECK(IntPoly{2, -1}.eval(3) == -1);
  CHECK(IntPoly::q_power(3, -2).coeff(3) == -2);
  CHECK(IntPoly{0, 0, 5}.valuation() == 2);
}

TEST_CASE("big coefficients survive") {
  IntPoly p{1, 1};
  IntPoly acc = 1;
  for (int i = 0; i < 80; ++i) acc *= p;
  CHECK(acc.coeff(40) == Integer("107507208733336176461620"));
  CHECK(exact_div(acc, IntPoly::q_power(0) * p) * p == acc);
}

TEST_CASE("exact division") {
  const IntPoly a{1, 2, 2, 1};  // (1+q)(1+q+q²)
  CHECK(exact_div(a, IntPoly{1, 1}) == IntPoly{1, 1, 1});
  CHECK_THROWS_AS(exact_div(a, IntPoly{2, 1}), NotDivisibleError);
  try {
    exact_div(IntPoly{1, 0, 1}, IntPoly{1, 1});
  } catch (const NotDivisibleError& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
    CHECK(e.remainder() == IntPoly(2));
  }
}

TEST_CASE("division round trip on random input") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int k = 0; k < 200; ++k) {
    IntPoly a{c(rng), c(rng), c(rng), c(rng)};
    IntPoly b{1, c(rng), c(rng)};
    CHECK(exact_div(a * b, b) == a);
    auto [quo, rem] = div_rem(a * b + 1, b);
    CHECK(quo * b + rem == a * b + 1);
    CHECK(rem.degree() < b.degree());
  }
}

TEST_CASE("gcd") {
  const IntPoly f{1, 1}, g{1, 0, 1}, h{3, 1};
  CHECK(gcd(f * g, g * h) == g);
  CHECK(gcd(IntPoly(), IntPoly()).is_zero());
  CHECK(gcd(f, h) == IntPoly(1));
}

TEST_CASE("localisation at P") {
  CHECK(in_P(IntPoly{1, 5, 7}));
  CHECK(in_P(IntPoly{-1, 1}));
  CHECK_FALSE(in_P(IntPoly{2, 1}));
  CHECK_FALSE(in_P(IntPoly{0, 1}));
  PFraction x(IntPoly{1, 1}, IntPoly{1, 2, 2, 1});
  CHECK(x == PFraction(IntPoly(1), IntPoly{1, 1, 1}));
  CHECK((x * PFraction(IntPoly{1, 1, 1})).is_integral());
  CHECK(x * x.inverse() == PFraction(1));
  CHECK(x + x - x == x);
  CHECK_THROWS(PFraction(IntPoly(1), IntPoly{0, 1}));
}

TEST_CASE("json round trip") {
  IntPoly p{-3, 0, 7};
  p += IntPoly::q_power(4, Integer("123456789012345678901234567890"));
  CHECK(poly_from_json(poly_to_json(p)) == p);
  CHECK(poly_from_json(Json::parse(poly_to_json(p).dump())) == p);
  CHECK_THROWS(poly_from_json(Json::parse("[1.5]")));
}
