#include "hecke/standard_paths.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "hecke/relations.hpp"

namespace hecke {

namespace {

// "13 0 2 0 1": turning points, 1-based digits, 0 for ∅ and S for the full set.
Path parse_tp(const std::string& text, Subset full) {
  std::istringstream is(text);
  std::string tok;
  std::vector<Subset> tp;
  while (is >> tok) {
    if (tok == "0") {
      tp.push_back(0);
    } else if (tok == "S") {
      tp.push_back(full);
    } else {
      Subset x = 0;
      for (char c : tok) x |= singleton(c - '1');
      tp.push_back(x);
    }
  }
  return from_turning_points(tp);
}

std::vector<Path> sorted(std::vector<Path> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// The transcribed lists, grouped by endpoints on insertion.
const char* const kA3Lists[] = {
    "12", "12 S 12",
    "13", "13 0 2 0 13", "13 S 13",
    "13 1 12", "13 S 12",
    "23 2 12", "23 S 12",
    "13 1", "13 0 2 0 1", "13 0 2 0 3 0 1", "13 S 1",
    "12 1", "12 1 13 1", "12 S 1",
    "23 0 1", "23 2 12 1", "23 S 1",
    "12 2", "12 0 3 0 2", "12 S 2",
    "13 0 2", "13 1 12 2", "13 3 23 2", "13 S 2",
    "1", "1 12 1", "1 13 1", "1 0 2 0 13 1", "1 13 0 2 0 1", "1 13 0 2 0 13 1", "1 S 1",
    "2 0 1", "2 0 13 1", "2 12 1", "2 23 0 1", "2 0 13 0 2 0 1", "2 12 1 13 1", "2 S 1",
    "3 0 1", "3 0 2 0 1", "3 23 0 1", "3 13 0 2 0 1", "3 13 0 2 0 13 1", "3 23 2 12 1", "3 S 1",
    "2", "2 12 2", "2 23 2", "2 0 13 0 2", "2 12 0 3 0 2", "2 23 0 1 0 2", "2 S 2",
};

}  // namespace

StandardPaths::StandardPaths(SystemPtr sys) : sys_(std::move(sys)) {
  switch (classify(*sys_)) {
    case SystemKind::Dihedral:
      build_dihedral();
      close_under_symmetry({1, 0});
      break;
    case SystemKind::A3:
      build_a3();
      close_under_symmetry({2, 1, 0});
      break;
    case SystemKind::Other:
      throw Error(ErrorKind::UnsupportedTorsion,
                  "standard paths are only tabulated for rank 2 and type A3");
  }
  fill_general();
}

const std::vector<Path>& StandardPaths::at(Subset I, Subset J) const {
  auto it = lists_.find({I, J});
  if (it == lists_.end())
    throw Error(ErrorKind::OutOfRange,
                "no standard paths from " + subset_str(I) + " to " + subset_str(J));
  return it->second;
}

bool StandardPaths::is_standard(const Path& p) const {
  auto it = lists_.find({p.start(), p.end()});
  if (it == lists_.end()) return false;
  return std::find(it->second.begin(), it->second.end(), p) != it->second.end();
}

void StandardPaths::put(Subset I, Subset J, std::vector<Path> paths) {
  for (const Path& p : paths) {
    NormalForm nf = normalize(*sys_, p);
    if (nf.path != p || !(nf.scalar == IntPoly(1)))
      throw Error(ErrorKind::BadPath, "standard path " + p.str() + " is not in normal form");
  }
  auto [it, inserted] = lists_.try_emplace({I, J}, paths);
  if (!inserted && sorted(it->second) != sorted(paths))
    notes_.push_back("lists for " + subset_str(I) + " -> " + subset_str(J) +
                     " disagree with a symmetry image");
}

void StandardPaths::build_dihedral() {
  const int n = sys_->m(0, 1);
  const Subset a = singleton(0), b = singleton(1), S = sys_->full();
  auto sandwich = [&](Subset from, const std::vector<int>& word, Subset to) {
    return then(then(Path{{from, 0}}, chi_word(word)), Path{{0, to}});
  };
  std::vector<Path> b11{trivial_path(a), Path{{a, S, a}}};
  const int top11 = n % 2 == 0 ? n / 2 - 1 : (n - 3) / 2;
  for (int j = 1; j <= top11; ++j) b11.push_back(sandwich(a, alternating_word(0, 1, 2 * j - 1, 1), a));
  std::vector<Path> b21;
  if (n > 2) b21.push_back(Path{{a, 0, b}});
  b21.push_back(Path{{a, S, b}});
  const int top21 = n % 2 == 0 ? n / 2 - 1 : (n - 1) / 2;
  for (int j = 2; j <= top21; ++j) b21.push_back(sandwich(a, alternating_word(0, 1, 2 * j - 2, 1), b));
  put(a, a, b11);
  put(a, b, b21);
}

void StandardPaths::build_a3() {
  std::map<std::pair<Subset, Subset>, std::vector<Path>> groups;
  for (const char* text : kA3Lists) {
    Path p = parse_tp(text, sys_->full());
    groups[{p.start(), p.end()}].push_back(p);
  }
  for (auto& [key, paths] : groups) put(key.first, key.second, std::move(paths));
}

void StandardPaths::close_under_symmetry(const std::vector<int>& sigma) {
  const auto base = lists_;
  for (const auto& [key, paths] : base) {
    for (int g = 1; g < 4; ++g) {
      std::vector<Path> img;
      for (Path p : paths) {
        if (g & 1) p = relabel(p, sigma);
        if (g & 2) p = tau(p);
        // Images of canonical chains are other maximal chains; straighten them.
        img.push_back(normalize(*sys_, p).path);
      }
      const Subset from = img.front().start(), to = img.front().end();
      put(from, to, std::move(img));
    }
  }
}

void StandardPaths::fill_general() {
  const CoxeterSystem& W = *sys_;
  const Subset S = W.full();
  for (Subset I : W.lambda())
    for (Subset J : W.lambda()) {
      if (lists_.count({I, J})) continue;
      std::vector<Path> out;
      if (J == S) {
        out.push_back(delta(S, I));
      } else if (I == S) {
        out.push_back(upsilon(J, S));
      } else if (I == 0 && J == 0) {
        for (Elem w = 0; w < static_cast<Elem>(W.order()); ++w) out.push_back(chi_word(W.word(w)));
      } else if (I == 0) {
        for (Elem d : W.double_coset_reps(J, 0)) out.push_back(then(chi_word(W.word(d)), delta(J, 0)));
      } else if (J == 0) {
        for (Elem d : W.double_coset_reps(I, 0)) 
          out.push_back(then(upsilon(0, I), chi_word(W.word(W.inverse(d)))));
      } else {
        continue;
      }
      put(I, J, std::move(out));
    }
}

IntPoly bareiss_det(std::vector<std::vector<IntPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  IntPoly prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return 0;
      std::swap(m[k], m[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

std::size_t integer_rank(std::vector<std::vector<Integer>> m) {
  std::vector<std::vector<mpq_class>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[rank], a[p]);
    for (std::size_t i = rank + 1; i < a.size(); ++i) {
      if (a[i][c] == 0) continue;
      mpq_class f = a[i][c] / a[rank][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<IntPoly>> eval_matrix(const SystemPtr& sys, const std::vector<Path>& paths,
                                              Subset I, Subset J) {
  PathEvaluator ev(sys);
  std::vector<std::vector<IntPoly>> rows;
  for (const Path& p : paths) {
    if (p.start() != I || p.end() != J) throw Error(ErrorKind::BadPath, "wrong endpoints");
    rows.push_back(express_in_basis(ev.eval(p)));
  }
  return rows;
}

bool SpanningReport::ok() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const SpanningEntry& e) { return e.paths == e.reps && e.independent; });
}

SpanningReport spanning_report(const StandardPaths& sp) {
  const SystemPtr& sys = sp.system();
  SpanningReport rep;
  for (const auto& [key, paths] : sp.lists()) {
    SpanningEntry e;
    e.I = key.first;
    e.J = key.second;
    e.paths = paths.size();
    e.reps = sys->double_coset_reps(e.J, e.I).size();
    auto m = eval_matrix(sys, paths, e.I, e.J);
    for (long q : {2L, 3L, 5L}) {
      std::vector<std::vector<Integer>> num;
      for (const auto& row : m) {
        num.emplace_back();
        for (const auto& c : row) num.back().push_back(c.eval(q));
      }
      e.ranks.push_back(integer_rank(std::move(num)));
    }
    e.independent = std::any_of(e.ranks.begin(), e.ranks.end(),
                                [&](std::size_t r) { return r == e.paths; });
    if (e.paths == e.reps) {
      e.det = bareiss_det(m);
      if (!e.independent) {
        e.symbolic = true;
        e.independent = !e.det.is_zero();
      }
      e.unimodular = e.det == IntPoly(1) || e.det == IntPoly(-1);
    }
    rep.total_paths += e.paths;
    rep.total_reps += e.reps;
    rep.entries.push_back(std::move(e));
  }
  return rep;
}

}  // namespace hecke
