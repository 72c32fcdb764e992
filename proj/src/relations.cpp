#include "hecke/relations.hpp"

#include <algorithm>
#include <functional>

namespace hecke {

SystemKind classify(const CoxeterSystem& sys) {
  if (sys.rank() == 2) return SystemKind::Dihedral;
  if (sys.rank() == 3 && sys.m(0, 1) == 3 && sys.m(1, 2) == 3 && sys.m(0, 2) == 2)
    return SystemKind::A3;
  return SystemKind::Other;
}

std::vector<const Relation*> RelationSet::family(const std::string& name) const {
  std::vector<const Relation*> out;
  for (const auto& r : relations)
    if (r.family == name) out.push_back(&r);
  return out;
}

PathElement chi_chain(const SystemPtr& sys, const std::vector<Subset>& chain) {
  GeneratorExpansion e = kl_generator_expansion(sys, chain);
  PathElement out(chi_word(e.word));
  for (const auto& [y, a] : e.corrections) out.add_term(chi_word(y), IntPoly::q() * a);
  return out;
}

Relation refined_braid(const CoxeterSystem& sys, int s, int t) {
  const int m = sys.m(s, t);
  const Subset K = singleton(s) | singleton(t);
  Relation r;
  r.family = "refined-braid";
  r.torsion = true;
  const Subset exit = m % 2 == 0 ? singleton(t) : singleton(s);
  r.id = subset_str(singleton(s)) + "<" + subset_str(K) + ">" + subset_str(exit);
  r.lhs = PathElement(Path{{singleton(s), K, exit}});
  r.rhs = PathElement(singleton(s), exit);
  const int jmin = m % 2 == 0 ? 2 : 3;
  for (int j = jmin; j <= m; ++j) {
    IntPoly b = b_coeff(m, j);
    if (b.is_zero()) continue;
    Path p = then(then(Path{{singleton(s), 0}}, chi_word(alternating_word(s, t, j - 2, t))),
                  Path{{0, exit}});
    r.rhs.add_term(p, b);
  }
  if (m % 2 == 1) {
    IntPoly c = IntPoly::q_power((m - 1) / 2, (m - 1) / 2 % 2 == 0 ? 1 : -1);
    r.rhs.add_term(trivial_path(singleton(s)), c);
  }
  return r;
}

std::vector<Relation> orbit(const CoxeterSystem& sys, const Relation& r, Subset support) {
  std::vector<int> dom;
  for (int s = 0; s < sys.rank(); ++s)
    if (contains(support, s)) dom.push_back(s);
  std::vector<Relation> out;
  auto add = [&](Relation x) {
    for (const auto& y : out)
      if (y.lhs == x.lhs && y.rhs == x.rhs) return;
    out.push_back(std::move(x));
  };
  std::vector<int> img(dom.size(), -1);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == dom.size()) {
      std::vector<int> perm(sys.rank());
      for (int s = 0; s < sys.rank(); ++s) perm[s] = s;
      for (std::size_t i = 0; i < dom.size(); ++i) perm[dom[i]] = img[i];
      std::string tag;
      for (std::size_t i = 0; i < dom.size(); ++i)
        tag += std::to_string(dom[i] + 1) + "->" + std::to_string(img[i] + 1) + " ";
      Relation x = r;
      x.lhs = relabel(r.lhs, perm);
      x.rhs = relabel(r.rhs, perm);
      x.id = r.id + " [" + tag + "]";
      Relation y = x;
      y.lhs = tau(x.lhs);
      y.rhs = tau(x.rhs);
      y.id += " tau";
      add(std::move(x));
      add(std::move(y));
      return;
    }
    for (int c = 0; c < sys.rank(); ++c) {
      if (std::find(img.begin(), img.begin() + static_cast<long>(k), c) !=
          img.begin() + static_cast<long>(k))
        continue;
      bool ok = true;
      for (std::size_t i = 0; i < k && ok; ++i) ok = sys.m(dom[i], dom[k]) == sys.m(img[i], c);
      if (!ok) continue;
      img[k] = c;
      rec(k + 1);
    }
    img[k] = -1;
  };
  rec(0);
  return out;
}

namespace {

Path tp_path(std::vector<Subset> tp) { return from_turning_points(tp); }

std::vector<Relation> a3_templates() {
  const Subset e = 0, s0 = 1, s1 = 2, s2 = 4, s01 = 3, s02 = 5, s12 = 6, S = 7;
  const IntPoly q = IntPoly::q();
  std::vector<Relation> out;
  {
    Relation r{"T1", "T1", PathElement(tp_path({s0, e, s1, e, s0})), {}, true};
    r.rhs = PathElement(tp_path({s0, s01, s0})) + PathElement(trivial_path(s0), q);
    out.push_back(r);
  }
  {
    Relation r{"T2", "T2", PathElement(tp_path({s2, e, s0})), {}, true};
    r.rhs = PathElement(tp_path({s2, s02, s0}));
    out.push_back(r);
  }
  {
    Relation r{"T3", "T3", PathElement(tp_path({s01, s0, s02, s0, s01})), {}, true};
    r.rhs = PathElement(tp_path({s01, S, s01})) +
            PathElement(trivial_path(s01), q * IntPoly{1, 1});
    out.push_back(r);
  }
  {
    Relation r{"T4", "T4", PathElement(tp_path({s02, s2, s12, s1, s01})), {}, true};
    r.rhs = PathElement(tp_path({s02, S, s01})) + PathElement(tp_path({s02, s0, s01}), q);
    out.push_back(r);
  }
  return out;
}

Subset path_support(const PathElement& p) {
  Subset u = 0;
  for (const auto& [path, c] : p.terms())
    for (Subset x : path.v) u |= x;
  return u;
}

}  // namespace

RelationSet relation_set(const SystemPtr& sys, bool strict) {
  RelationSet rs;
  const CoxeterSystem& W = *sys;
  const std::vector<Subset> all = W.lambda();

  for (Subset J : all)
    for (int s = 0; s < W.rank(); ++s) {
      if (!contains(J, s)) continue;
      Subset I = J & ~singleton(s);
      Relation r;
      r.family = "J1";
      r.id = subset_str(J) + ">" + subset_str(I) + ">" + subset_str(J);
      r.lhs = PathElement(Path{{J, I, J}});
      r.rhs = PathElement(trivial_path(J), exact_div(poincare_poly(W, J), poincare_poly(W, I)));
      rs.relations.push_back(std::move(r));
    }

  for (Subset K : all) {
    if (subset_size(K) < 2) continue;
    for (int s = 0; s < W.rank(); ++s)
      for (int t = s + 1; t < W.rank(); ++t) {
        if (!contains(K, s) || !contains(K, t)) continue;
        const Subset I = K & ~singleton(s) & ~singleton(t);
        const Subset A = I | singleton(s), B = I | singleton(t);
        Relation up{"J2", subset_str(I) + "<" + subset_str(K), PathElement(Path{{I, A, K}}),
                    PathElement(Path{{I, B, K}}), false};
        Relation down{"J2", subset_str(K) + ">" + subset_str(I), PathElement(Path{{K, A, I}}),
                      PathElement(Path{{K, B, I}}), false};
        rs.relations.push_back(std::move(up));
        rs.relations.push_back(std::move(down));
      }
  }

  for (Subset I : all) {
    if (subset_size(I) < 2) continue;
    std::vector<int> order;
    for (int s = 0; s < W.rank(); ++s)
      if (contains(I, s)) order.push_back(s);
    do {
      std::vector<Subset> chain;
      Subset cur = 0;
      for (int s : order) chain.push_back(cur |= singleton(s));
      Path mountain{{0}};
      for (Subset c : chain) mountain.v.push_back(c);
      for (auto it = chain.rbegin() + 1; it != chain.rend(); ++it) mountain.v.push_back(*it);
      mountain.v.push_back(0);
      std::string id;
      for (int s : order) id += std::to_string(s + 1);
      rs.relations.push_back(Relation{"J3", id, PathElement(mountain), chi_chain(sys, chain), false});
    } while (std::next_permutation(order.begin(), order.end()));
  }

  for (int s = 0; s < W.rank(); ++s)
    for (int t = 0; t < W.rank(); ++t)
      if (s != t) rs.relations.push_back(refined_braid(W, s, t));

  switch (classify(W)) {
    case SystemKind::Dihedral:
      rs.torsion_supported = true;
      break;
    case SystemKind::A3:
      rs.torsion_supported = true;
      for (const Relation& t : a3_templates()) {
        auto inst = orbit(W, t, path_support(t.lhs) | path_support(t.rhs));
        rs.orbit_sizes[t.family] = static_cast<int>(inst.size());
        for (auto& r : inst) rs.relations.push_back(std::move(r));
      }
      break;
    case SystemKind::Other:
      if (strict)
        throw Error(ErrorKind::UnsupportedTorsion,
                    "torsion relations are only available in rank 2 and type A3");
      rs.note = "torsion relations are only available in rank 2 and type A3; "
                "refined braid relations on rank-2 parabolics are still listed";
      break;
  }
  return rs;
}

}  // namespace hecke
