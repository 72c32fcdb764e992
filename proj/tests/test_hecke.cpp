#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <random>

#include "hecke/hecke_algebra.hpp"
#include "hecke/kl_cache.hpp"
#include "oracles.hpp"

using namespace hecke;

namespace {

HeckeElement random_element(const SystemPtr& sys, std::mt19937_64& rng) {
  std::uniform_int_distribution<Elem> pick(0, static_cast<Elem>(sys->order()) - 1);
  std::uniform_int_distribution<long> c(-4, 4);
  HeckeElement h(sys);
  for (int k = 0; k < 3; ++k) h.add_term(pick(rng), IntPoly{c(rng), c(rng)});
  return h;
}

}  // namespace

TEST_CASE("product agrees with the defining relations") {
  for (const char* t : {"A3", "B2", "I2(5)"}) {
    auto sys = make_system(t);
    std::mt19937_64 rng(11);
    for (int k = 0; k < 100; ++k) {
      HeckeElement a = random_element(sys, rng), b = random_element(sys, rng);
      CHECK(oracle::from(a * b) == oracle::product(*sys, oracle::from(a), oracle::from(b)));
    }
  }
}

TEST_CASE("unit, zero and mixed systems") {
  auto sys = make_system("A2");
  HeckeElement x = x_gen(sys, 0);
  CHECK(HeckeElement::one(sys) * x == x);
  CHECK((HeckeElement::zero(sys) * x).is_zero());
  CHECK(x.str() == "T_e + T_1");
  CHECK_THROWS(x * x_gen(make_system("B2"), 0));
}

TEST_CASE("Poincare polynomials") {
  for (const char* t : {"A3", "B3", "G2"}) {
    auto sys = make_system(t);
    for (Subset I : sys->lambda()) CHECK(poincare_poly(*sys, I) == oracle::poincare(*sys, I));
  }
  CHECK(poincare_poly(*make_system("I2(3)"), 0b11) == IntPoly{1, 2, 2, 1});
}

TEST_CASE("x_I and the generator expansion") {
  auto sys = make_system("A3");
  for (Subset I : sys->lambda()) {
    HeckeElement x = x_I(sys, I);
    CHECK(x.size() == sys->parabolic(I).size());
    CHECK(x * x == x * poincare_poly(*sys, I));
    if (I == 0) continue;
    const auto e = kl_generator_expansion(sys, default_chain(I));
    CHECK(expand(sys, e) == x);
    CHECK(static_cast<int>(e.word.size()) == sys->length(sys->longest_element(I)));
  }
  CHECK_THROWS_AS(kl_generator_expansion(sys, {0b001, 0b111}), Error);
}

TEST_CASE("the A3 expansion for the chain {1} < {1,3} < S") {
  auto sys = make_system("A3");
  const auto e = kl_generator_expansion(sys, {0b001, 0b101, 0b111});
  // x_S = x_213213... has corrections only in lower q-degree monomials.
  CHECK(expand(sys, e) == x_I(sys, 0b111));
  for (const auto& [y, a] : e.corrections) CHECK(y.size() < e.word.size());
}

TEST_CASE("dihedral elements") {
  auto sys = make_system("I2(6)");
  const IntPoly q = IntPoly::q();
  CHECK(dihedral_x_m(sys, 0, 1, 1) == x_gen(sys, 1));
  CHECK(dihedral_x_m(sys, 0, 1, 2) == x_gen(sys, 0) * x_gen(sys, 1));
  CHECK(dihedral_x_m(sys, 0, 1, 3) == x_word(sys, {1, 0, 1}) - x_gen(sys, 1) * q);
  CHECK(dihedral_x_m(sys, 0, 1, 6) == x_I(sys, 0b11));
  CHECK(dihedral_x_m(sys, 1, 0, 6) == x_I(sys, 0b11));
  CHECK(alternating_word(0, 1, 3, 1) == std::vector<int>{1, 0, 1});
  CHECK(alternating_word(0, 1, 2, 1) == std::vector<int>{0, 1});
  CHECK(b_coeff(5, 1) == IntPoly{0, 0, 1});
  CHECK(b_coeff(6, 2) == IntPoly{0, 0, 3});
  CHECK(b_coeff(6, 3).is_zero());
}

TEST_CASE("iota and specialisation") {
  auto sys = make_system("A3");
  std::mt19937_64 rng(3);
  for (int k = 0; k < 50; ++k) {
    HeckeElement a = random_element(sys, rng), b = random_element(sys, rng);
    CHECK(iota(a * b) == iota(b) * iota(a));
    CHECK(iota(iota(a)) == a);
    CHECK(specialize_0(specialize_0(a) * specialize_0(b)) == specialize_0(a * b));
  }
}

TEST_CASE("Kazhdan-Lusztig polynomials against R-polynomials") {
  for (const char* t : {"A3", "B3", "I2(7)"}) {
    auto sys = make_system(t);
    const CoxeterSystem& W = *sys;
    oracle::KL ref(W);
    KLCache kl(sys);
    for (Elem w = 0; w < static_cast<Elem>(W.order()); ++w)
      for (Elem y = 0; y < static_cast<Elem>(W.order()); ++y) {
        CAPTURE(W.word_str(y));
        CAPTURE(W.word_str(w));
        CHECK(kl.kl_poly(y, w) == ref.P(y, w));
      }
  }
}

TEST_CASE("known polynomials") {
  auto sys = make_system("A3");
  KLCache kl(sys);
  // The two singular Schubert varieties in A3: P = 1 + q.
  int nontrivial = 0;
  for (Elem w = 0; w < 24; ++w)
    for (Elem y = 0; y < 24; ++y)
      if (kl.kl_poly(y, w).degree() > 0) {
        CHECK(kl.kl_poly(y, w) == IntPoly{1, 1});
        ++nontrivial;
      }
  CHECK(nontrivial > 0);
  CHECK(kl.mu(sys->from_word({1}), sys->from_word({1, 0, 2, 1})) == 1);
  CHECK(c_plus(sys->gen(0), kl) == x_gen(sys, 0));
  CHECK(c_plus(sys->longest_element(0b111), kl) == x_I(sys, 0b111));
}

TEST_CASE("KL cache file") {
  auto sys = make_system("B2");
  KLCache a(sys);
  a.fill();
  const std::string path = "kl_cache_test_b2.json";
  a.save(path);
  KLCache b(sys);
  CHECK(b.load(path));
  CHECK(b.size() == a.size());
  for (Elem w = 0; w < 8; ++w) CHECK(b.c_plus(w) == a.c_plus(w));
  KLCache c(make_system("A2"));
  CHECK_FALSE(c.load(path));
  CHECK(c.size() == 0);
  std::remove(path.c_str());
}
