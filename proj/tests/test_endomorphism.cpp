#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hecke/endomorphism.hpp"
#include "hecke/zero_hecke.hpp"

using namespace hecke;

TEST_CASE("left division by x_J") {
  auto sys = make_system("A3");
  std::mt19937_64 rng(5);
  for (Subset J : sys->lambda()) {
    const auto reps = sys->min_coset_reps(J);
    CHECK(left_divide_by_xJ(J, x_I(sys, J)) == HeckeElement::one(sys));
    for (int k = 0; k < 10; ++k) {
      HeckeElement h(sys);
      for (int i = 0; i < 3; ++i) h.add_term(reps[rng() % reps.size()], IntPoly{long(rng() % 7) - 3, 1});
      CHECK(left_divide_by_xJ(J, x_I(sys, J) * h) == h);
    }
  }
  try {
    left_divide_by_xJ(0b001, HeckeElement::basis(sys, sys->gen(0)));
    FAIL("T_1 is not in x_1 H");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotInImage);
  }
}

TEST_CASE("hom basis and coefficients") {
  auto sys = make_system("A3");
  for (Subset I : sys->lambda())
    for (Subset J : sys->lambda()) {
      const HomBasis b = hom_basis(sys, I, J);
      CHECK(b.reps == sys->double_coset_reps(J, I));
      for (std::size_t k = 0; k < b.homs.size(); ++k) {
        auto c = express_in_basis(b.homs[k]);
        for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i] == IntPoly(i == k ? 1 : 0));
      }
    }
}

TEST_CASE("composition") {
  auto sys = make_system("A3");
  const Subset I = 0b001, J = 0b011;
  const HomElement u = gen_u(sys, I, J), dp = gen_dprime(sys, J, I);
  CHECK(compose(identity_hom(sys, I), u) == u);
  CHECK(compose(u, identity_hom(sys, J)) == u);
  // d'u = (π(J)/π(I)) 1_J
  CHECK(compose(dp, u) == identity_hom(sys, J) * IntPoly{1, 1, 1});
  CHECK_THROWS(compose(u, u));
  CHECK_THROWS_AS(gen_u(sys, 0, 0b011), Error);
}

TEST_CASE("the rank-2 quasi-idempotent coefficient") {
  auto sys = make_system("I2(3)");
  const HomElement r = compose(gen_dprime(sys, 0b11, 0b01), gen_u(sys, 0b01, 0b11));
  CHECK(express_in_basis(r) == std::vector<IntPoly>{IntPoly{1, 1, 1}});
}

TEST_CASE("localised homomorphisms") {
  auto sys = make_system("B2");
  const RHom d = gen_d(sys, 0b01, 0);
  const RHom u(gen_u(sys, 0, 0b01));
  CHECK(compose(d, u) == RHom(identity_hom(sys, 0b01)));
  CHECK_FALSE(d.is_integral());
  CHECK(u.is_integral());
  const RHom e = compose(u, d);
  CHECK(compose(e, e) == e);
  CHECK_THROWS_AS(RHom(u.num, IntPoly{2, 1}), Error);
}

TEST_CASE("Theta basis") {
  auto sys = make_system("A3");
  KLCache kl(sys);
  const Subset I = 0b001, J = 0b100;
  for (Elem d : sys->double_coset_reps_longest(I, J)) {
    const HomElement t = theta(kl, I, d, J);
    CHECK(t.source == J);
    CHECK(t.target == I);
    auto coeffs = express_in_theta(kl, t);
    for (const auto& [e, c] : coeffs) CHECK(c == IntPoly(e == d ? 1 : 0));
  }
  CHECK_THROWS_AS(theta(kl, I, sys->identity(), J), Error);
}

TEST_CASE("ZB algebra") {
  auto sys = make_system("A3");
  const ZBElement f1 = zb_idempotent(sys, 0b001);
  CHECK(zb_multiply(f1, f1) == f1);
  CHECK(zb_multiply(f1, zb_idempotent(sys, 0b010)).is_zero());
  CHECK(zb_multiply(zb_d(sys, 0b011, 0b001), zb_u(sys, 0b001, 0b011)) == zb_idempotent(sys, 0b011));
  CHECK_THROWS_AS(ZBElement::basis(sys, 0b001, sys->identity(), 0b001), Error);
  const ZBElement one = zb_identity(sys);
  CHECK(zb_multiply(one, f1) == f1);
}

TEST_CASE("double coset factorization") {
  auto sys = make_system("A3");
  const CoxeterSystem& W = *sys;
  for (Subset I : W.lambda())
    for (Subset J : W.lambda())
      for (Elem d : W.double_coset_reps_longest(I, J)) {
        const Factorization f = factorize_double_coset(sys, I, d, J);
        CHECK(f.longest == d);
        CHECK(multiply_out(sys, f) == ZBElement::basis(sys, I, d, J));
      }
  // f_I itself needs no covering steps.
  const Factorization f = factorize_double_coset(sys, 0b011, W.longest_element(0b011), 0b011);
  for (const auto& st : f.steps) CHECK(st.kind == FactorStep::Kind::Idempotent);
}
