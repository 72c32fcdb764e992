#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hecke/coxeter.hpp"
#include "oracles.hpp"

using namespace hecke;

TEST_CASE("orders of named types") {
  const std::vector<std::pair<std::string, std::size_t>> table = {
      {"A1", 2}, {"A2", 6}, {"A3", 24}, {"B2", 8}, {"B3", 48}, {"G2", 12},
      {"I2(5)", 10}, {"I2(8)", 16}, {"D4", 192}, {"H3", 120}, {"F4", 1152}};
  for (const auto& [t, n] : table) {
    CAPTURE(t);
    CHECK(make_system(t)->order() == n);
  }
}

TEST_CASE("bad input") {
  CHECK_THROWS_AS(make_system("Z9"), Error);
  try {
    make_system("[[1,3,3],[3,1,3],[3,3,1]]", 2000);
    FAIL("affine A2 must not enumerate");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NonFiniteGroup);
  }
  try {
    make_system("[[1,2],[3,1]]");
    FAIL("asymmetric matrix accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadMatrix);
  }
}

TEST_CASE("matrix input matches the named type") {
  auto a = make_system("[[1,3,2],[3,1,3],[2,3,1]]");
  auto b = make_system("A3");
  CHECK(a->order() == b->order());
  CHECK(a->fingerprint() == b->fingerprint());
}

TEST_CASE("words, lengths and ShortLex ids") {
  auto sys = make_system("B3");
  const CoxeterSystem& W = *sys;
  for (Elem w = 0; w < static_cast<Elem>(W.order()); ++w) {
    CHECK(W.from_word(W.word(w)) == w);
    CHECK(static_cast<int>(W.word(w).size()) == W.length(w));
    CHECK(W.multiply(w, W.inverse(w)) == W.identity());
    if (w > 0) {
      CHECK(W.length(w - 1) <= W.length(w));
    }
    for (int s = 0; s < W.rank(); ++s) {
      CHECK(std::abs(W.length(W.rmul(w, s)) - W.length(w)) == 1);
      CHECK(contains(W.descents_right(w), s) == (W.length(W.rmul(w, s)) < W.length(w)));
      CHECK(contains(W.descents_left(w), s) == (W.length(W.lmul(s, w)) < W.length(w)));
    }
  }
  CHECK(W.length(W.longest_element(W.full())) == 9);
}

TEST_CASE("parabolics and double cosets against a flood fill") {
  for (const char* t : {"A3", "B3", "I2(7)"}) {
    auto sys = make_system(t);
    const CoxeterSystem& W = *sys;
    for (Subset I : W.lambda()) {
      CHECK(W.parabolic(I).size() == oracle::poincare(W, I).eval(1));
      for (Subset J : W.lambda()) {
        const auto mins = W.double_coset_reps(I, J);
        const auto maxs = W.double_coset_reps_longest(I, J);
        CHECK(mins.size() == oracle::double_coset_count(W, I, J));
        CHECK(maxs.size() == mins.size());
        std::size_t total = 0;
        for (Elem d : mins) {
          CHECK(W.is_min_double(I, d, J));
          const auto coset = W.double_coset(I, d, J);
          total += coset.size();
          CHECK(W.is_max_double(I, W.double_coset_max(I, d, J), J));
          for (Elem x : coset) CHECK(W.double_coset_min(I, x, J) == d);
        }
        CHECK(total == W.order());
      }
    }
  }
}

TEST_CASE("Bruhat order by subwords") {
  auto sys = make_system("A3");
  const CoxeterSystem& W = *sys;
  const Elem w0 = W.longest_element(W.full());
  for (Elem y = 0; y < static_cast<Elem>(W.order()); ++y) {
    CHECK(W.bruhat_leq(W.identity(), y));
    CHECK(W.bruhat_leq(y, w0));
    // Multiplying by w0 reverses the order.
    for (Elem w = 0; w < static_cast<Elem>(W.order()); ++w)
      CHECK(W.bruhat_leq(y, w) == W.bruhat_leq(W.multiply(w0, w), W.multiply(w0, y)));
  }
}

TEST_CASE("Demazure product") {
  auto sys = make_system("A3");
  const CoxeterSystem& W = *sys;
  auto fold = [&](Elem x, Elem y) {
    for (int s : W.word(y))
      if (W.length(W.rmul(x, s)) > W.length(x)) x = W.rmul(x, s);
    return x;
  };
  for (Elem x = 0; x < static_cast<Elem>(W.order()); ++x)
    for (Elem y = 0; y < static_cast<Elem>(W.order()); ++y) {
      CHECK(W.demazure(x, y) == fold(x, y));
      if (W.length(W.multiply(x, y)) == W.length(x) + W.length(y)) CHECK(W.demazure(x, y) == W.multiply(x, y));
    }
}

TEST_CASE("subset notation is 1-based") {
  CHECK(subset_str(0) == "{}");
  CHECK(subset_str(0b101) == "{1,3}");
  CHECK(parse_subset("13", 3) == 0b101);
  CHECK(parse_subset("{1,3}", 3) == 0b101);
  CHECK(parse_subset("{}", 3) == 0);
  CHECK_THROWS(parse_subset("4", 3));
}
