#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "hecke/relations.hpp"
#include "hecke/rewrite.hpp"
#include "hecke/standard_paths.hpp"

using namespace hecke;

namespace {

const Subset S1 = 0b001, S2 = 0b010, S3 = 0b100, S12 = 0b011, S13 = 0b101, S23 = 0b110, S = 0b111;

}  // namespace

TEST_CASE("quiver shape") {
  auto sys = make_system("A3");
  const HasseQuiver q = build_quiver(*sys);
  CHECK(q.vertices.size() == 8);
  CHECK(q.covers.size() == 12);
  CHECK(q.arrow_count() == 24);
}

TEST_CASE("paths") {
  auto sys = make_system("A3");
  const Path p = make_path(*sys, {S1, S12, S2});
  CHECK(p.start() == S1);
  CHECK(p.end() == S2);
  CHECK(p.length() == 2);
  CHECK(p.str() == "{1} > {1,2} > {2}");
  CHECK_THROWS_AS(make_path(*sys, {S1, S23}), Error);
  CHECK(tau(p) == Path{{S2, S12, S1}});
  CHECK(then(Path{{0, S1}}, Path{{S1, S12}}) == Path{{0, S1, S12}});
  CHECK(upsilon(0, S13) == Path{{S13, S3, 0}});
  CHECK(delta(S13, 0) == Path{{0, S1, S13}});
  CHECK(from_turning_points({S13, 0, S2}) == Path{{S13, S3, 0, S2}});
  CHECK(chi_word({0, 2}) == Path{{0, S3, 0, S1, 0}});
  CHECK(relabel(p, {2, 1, 0}) == Path{{S3, S23, S2}});
}

TEST_CASE("path algebra products") {
  const PathElement a(Path{{0, S1}}), b(Path{{S1, 0}});
  // a*b: b first.
  CHECK((a * b).terms().begin()->first == Path{{S1, 0, S1}});
  CHECK(((b * a) * IntPoly{0, 2}).terms().begin()->second == IntPoly{0, 2});
  CHECK_THROWS(a * a);
}

TEST_CASE("evaluation conventions") {
  auto sys = make_system("A3");
  PathEvaluator ev(sys);
  CHECK(ev.eval(Path{{S1, 0}}) == gen_u(sys, 0, S1));
  CHECK(ev.eval(Path{{0, S1}}) == gen_dprime(sys, S1, 0));
  CHECK(ev.eval(trivial_path(S12)) == identity_hom(sys, S12));
  // χ_s acts as x_s.
  CHECK(ev.eval(chi_s(1)).value == x_gen(sys, 1));
  CHECK(ev.eval(chi_word({0, 1})).value == x_gen(sys, 0) * x_gen(sys, 1));
}

TEST_CASE("quasi-idempotent coefficient in I_3") {
  auto sys = make_system("I2(3)");
  const RelationSet rs = relation_set(sys);
  bool seen = false;
  for (const Relation* r : rs.family("J1")) {
    if (r->lhs.terms().begin()->first != Path{{0b11, 0b01, 0b11}}) continue;
    seen = true;
    CHECK(r->rhs == PathElement(trivial_path(0b11), IntPoly{1, 1, 1}));
  }
  CHECK(seen);
}

TEST_CASE("normal forms") {
  auto sys = make_system("A3");
  // A valley rises to the meet of its neighbours at the cost of π(top)/π(valley).
  const NormalForm a = normalize(*sys, Path{{S1, 0, S1}});
  CHECK(a.path == trivial_path(S1));
  CHECK(a.scalar == IntPoly{1, 1});
  const NormalForm b = normalize(*sys, Path{{0, S1, 0, S1}});
  CHECK(b.scalar == IntPoly{1, 1});
  CHECK(b.path == Path{{0, S1}});
  const NormalForm c = normalize(*sys, Path{{S1, S12, S2, S12}});
  CHECK(c.path == Path{{S1, S12}});
  CHECK(c.scalar == IntPoly{1, 1, 1});
  const NormalForm d = normalize(*sys, Path{{S13, S3, 0, S2}});
  CHECK(d.path == Path{{S13, S3, 0, S2}});
  CHECK(d.scalar == IntPoly(1));
  PathEvaluator ev(sys);
  std::mt19937_64 rng(2);
  for (int k = 0; k < 200; ++k) {
    Subset cur = rng() % 8;
    std::vector<Subset> v{cur};
    for (int i = 0; i < 8; ++i) v.push_back(cur ^= singleton(rng() % 3));
    const NormalForm nf = normalize(*sys, Path{v});
    CHECK(ev.eval(nf.path) * nf.scalar == ev.eval(Path{v}));
  }
}

TEST_CASE("relation sets") {
  auto a3 = make_system("A3");
  const RelationSet rs = relation_set(a3, true);
  CHECK(rs.torsion_supported);
  CHECK(rs.orbit_sizes.at("T1") == 4);
  CHECK(rs.orbit_sizes.at("T2") == 2);
  CHECK(rs.orbit_sizes.at("T3") == 2);
  CHECK(rs.orbit_sizes.at("T4") == 4);
  CHECK(rs.family("refined-braid").size() == 6);
  CHECK_THROWS_AS(relation_set(make_system("B3"), true), Error);
  const RelationSet b3 = relation_set(make_system("B3"), false);
  CHECK_FALSE(b3.torsion_supported);
  CHECK(b3.family("T1").empty());
}

TEST_CASE("T1 instance") {
  auto sys = make_system("A3");
  const RelationSet rs = relation_set(sys);
  PathEvaluator ev(sys);
  for (const Relation* r : rs.family("T1")) {
    CHECK(ev.eval(r->lhs) == ev.eval(r->rhs));
    CHECK(torsion_check(sys, r->difference()));
  }
}

TEST_CASE("torsion criterion") {
  auto sys = make_system("I2(4)");
  // A bare arrow is not torsion.
  CHECK_FALSE(torsion_check(sys, PathElement(Path{{0b01, 0b11}})));
  const RelationSet rs = relation_set(sys);
  for (const Relation* r : rs.family("refined-braid")) CHECK(torsion_check(sys, r->difference()));
}

TEST_CASE("standard path counts") {
  auto i6 = make_system("I2(6)");
  const StandardPaths s6(i6);
  CHECK(s6.at(0b01, 0b01).size() == 4);
  auto a3 = make_system("A3");
  const StandardPaths sa(a3);
  CHECK(sa.at(S13, S2).size() == 4);
  CHECK(sa.is_standard(Path{{S13, S1, S12, S2}}));
  CHECK_FALSE(sa.is_standard(Path{{S13, S3, 0, S3, S23, S2}}));
  std::size_t total = 0;
  for (const auto& [key, paths] : sa.lists()) total += paths.size();
  CHECK(total == 281);
  CHECK_THROWS_AS(StandardPaths(make_system("B3")), Error);
}

TEST_CASE("spanning report") {
  for (const char* t : {"A3", "I2(2)", "I2(5)", "I2(8)"}) {
    const StandardPaths sp(make_system(t));
    const SpanningReport r = spanning_report(sp);
    CHECK(r.ok());
    for (const auto& e : r.entries) CHECK(e.unimodular);
  }
}

TEST_CASE("exact linear algebra helpers") {
  CHECK(bareiss_det({{IntPoly{1, 1}, IntPoly(1)}, {IntPoly(1), IntPoly(1)}}) == IntPoly{0, 1});
  CHECK(bareiss_det({{IntPoly(0), IntPoly(1)}, {IntPoly(1), IntPoly(0)}}) == IntPoly(-1));
  CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
  CHECK(integer_rank({{1, 2}, {3, 4}}) == 2);
}

TEST_CASE("the worked A3 rewrite") {
  auto sys = make_system("A3");
  Rewriter rw(sys);
  const Path p = then(then(upsilon(0, S13), chi_word({0, 2, 1})), delta(S2, 0));
  PathElement expect(Path{{S13, S1, S12, S2}}, IntPoly{0, 1});
  expect += PathElement(Path{{S13, S3, 0, S2}}, IntPoly{0, 1, 1});
  expect += PathElement(Path{{S13, S3, S23, S2}}, IntPoly{0, 1});
  expect += PathElement(Path{{S13, S, S23, S2}});
  CHECK(rw.rewrite(p) == expect);
  CHECK_FALSE(rw.trace().empty());
}

TEST_CASE("rewriting keeps the evaluation") {
  for (const char* t : {"A3", "I2(3)", "I2(6)"}) {
    auto sys = make_system(t);
    Rewriter rw(sys);
    PathEvaluator ev(sys);
    std::mt19937_64 rng(9);
    const auto verts = sys->lambda();
    for (int k = 0; k < 100; ++k) {
      Subset cur = verts[rng() % verts.size()];
      std::vector<Subset> v{cur};
      for (int i = 0; i < 7; ++i) v.push_back(cur ^= singleton(static_cast<int>(rng() % sys->rank())));
      const PathElement out = rw.rewrite(Path{v});
      CHECK(ev.eval(out) == ev.eval(Path{v}));
      for (const auto& [p, c] : out.terms()) CHECK(rw.standard().is_standard(p));
    }
  }
}
