#include "hecke/quiver.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hecke {

namespace {

bool covers(Subset lower, Subset upper) {
  return subset_of(lower, upper) && subset_size(upper) == subset_size(lower) + 1;
}

bool is_step(Subset a, Subset b) { return covers(a, b) || covers(b, a); }

}  // namespace

bool Path::visits(Subset x) const { return std::find(v.begin(), v.end(), x) != v.end(); }

std::vector<Subset> Path::turning_points() const {
  std::vector<Subset> tp{v.front()};
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    bool up_in = subset_size(v[i]) > subset_size(v[i - 1]);
    bool up_out = subset_size(v[i + 1]) > subset_size(v[i]);
    if (up_in != up_out) tp.push_back(v[i]);
  }
  if (v.size() > 1) tp.push_back(v.back());
  return tp;
}

std::string Path::str() const {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += " > ";
    out += subset_str(v[i]);
  }
  return out;
}

Path make_path(const CoxeterSystem& sys, std::vector<Subset> vertices) {
  if (vertices.empty()) throw Error(ErrorKind::BadPath, "a path needs at least one vertex");
  for (Subset x : vertices)
    if (!subset_of(x, sys.full())) throw Error(ErrorKind::BadPath, "vertex outside S");
  for (std::size_t i = 1; i < vertices.size(); ++i)
    if (!is_step(vertices[i - 1], vertices[i]))
      throw Error(ErrorKind::BadPath, subset_str(vertices[i - 1]) + " and " +
                                          subset_str(vertices[i]) + " are not a covering pair");
  return Path{std::move(vertices)};
}

Path trivial_path(Subset K) { return Path{{K}}; }

Path then(const Path& a, const Path& b) {
  if (a.end() != b.start())
    throw Error(ErrorKind::BadPath, "paths do not meet: " + subset_str(a.end()) + " vs " +
                                        subset_str(b.start()));
  Path out = a;
  out.v.insert(out.v.end(), b.v.begin() + 1, b.v.end());
  return out;
}

std::vector<Subset> chain_up(Subset lower, Subset upper) {
  std::vector<Subset> out{lower};
  Subset cur = lower;
  for (int s = 0; s < 32; ++s) {
    if (contains(upper, s) && !contains(lower, s)) {
      cur |= singleton(s);
      out.push_back(cur);
    }
  }
  return out;
}

std::vector<Subset> chain_down(Subset upper, Subset lower) {
  std::vector<Subset> out{upper};
  Subset cur = upper;
  for (int s = 0; s < 32; ++s) {
    if (contains(upper, s) && !contains(lower, s)) {
      cur &= ~singleton(s);
      out.push_back(cur);
    }
  }
  return out;
}

Path from_turning_points(const std::vector<Subset>& tp) {
  Path p{{tp.front()}};
  for (std::size_t i = 1; i < tp.size(); ++i) {
    Subset a = tp[i - 1], b = tp[i];
    std::vector<Subset> seg;
    if (subset_of(a, b)) {
      seg = chain_up(a, b);
    } else if (subset_of(b, a)) {
      seg = chain_down(a, b);
    } else {
      throw Error(ErrorKind::BadPath, "turning points " + subset_str(a) + " and " +
                                          subset_str(b) + " are not comparable");
    }
    p.v.insert(p.v.end(), seg.begin() + 1, seg.end());
  }
  return p;
}

Path upsilon(Subset I, Subset J) {
  if (!subset_of(I, J)) throw Error(ErrorKind::BadPath, "υ needs I ⊆ J");
  return Path{chain_down(J, I)};
}

Path delta(Subset J, Subset I) {
  if (!subset_of(I, J)) throw Error(ErrorKind::BadPath, "δ needs I ⊆ J");
  return Path{chain_up(I, J)};
}

Path chi_s(int s) { return Path{{0, singleton(s), 0}}; }

Path chi_word(const std::vector<int>& letters) {
  Path p{{0}};
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    p.v.push_back(singleton(*it));
    p.v.push_back(0);
  }
  return p;
}

Path tau(const Path& p) { return Path{{p.v.rbegin(), p.v.rend()}}; }

Subset relabel(Subset a, const std::vector<int>& perm) {
  Subset out = 0;
  for (int s = 0; s < static_cast<int>(perm.size()); ++s)
    if (contains(a, s)) out |= singleton(perm[s]);
  return out;
}

Path relabel(const Path& p, const std::vector<int>& perm) {
  Path out;
  for (Subset x : p.v) out.v.push_back(relabel(x, perm));
  return out;
}

PathElement::PathElement(const Path& p, const IntPoly& c) : src_(p.start()), dst_(p.end()) {
  add_term(p, c);
}

void PathElement::add_term(const Path& p, const IntPoly& c) {
  if (p.start() != src_ || p.end() != dst_)
    throw Error(ErrorKind::BadPath, "path " + p.str() + " has the wrong endpoints for " +
                                        subset_str(src_) + " -> " + subset_str(dst_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(p, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void PathElement::require(const PathElement& o) const {
  if (src_ != o.src_ || dst_ != o.dst_)
    throw Error(ErrorKind::BadPath, "relation sides must share endpoints");
}

PathElement& PathElement::operator+=(const PathElement& o) {
  require(o);
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

PathElement& PathElement::operator-=(const PathElement& o) {
  require(o);
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

PathElement& PathElement::operator*=(const IntPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [p, v] : terms_) v *= c;
  return *this;
}

PathElement operator*(const PathElement& a, const PathElement& b) {
  if (b.dst_ != a.src_)
    throw Error(ErrorKind::BadPath, "product of non-composable path elements");
  PathElement out(b.src_, a.dst_);
  for (const auto& [pb, cb] : b.terms_)
    for (const auto& [pa, ca] : a.terms_) out.add_term(then(pb, pa), ca * cb);
  return out;
}

std::string PathElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (!(c == IntPoly(1))) os << "(" << c.str() << ")*";
    os << "[" << p.str() << "]";
  }
  return os.str();
}

PathElement tau(const PathElement& p) {
  PathElement out(p.target(), p.source());
  for (const auto& [path, c] : p.terms()) out.add_term(tau(path), c);
  return out;
}

PathElement relabel(const PathElement& p, const std::vector<int>& perm) {
  PathElement out(relabel(p.source(), perm), relabel(p.target(), perm));
  for (const auto& [path, c] : p.terms()) out.add_term(relabel(path, perm), c);
  return out;
}

HasseQuiver build_quiver(const CoxeterSystem& sys) {
  HasseQuiver q;
  q.vertices = sys.lambda();
  for (Subset I : q.vertices)
    for (int s = 0; s < sys.rank(); ++s)
      if (!contains(I, s)) q.covers.emplace_back(I, I | singleton(s));
  return q;
}

HomElement PathEvaluator::eval(const Path& p) {
  auto it = memo_.find(p);
  if (it != memo_.end()) return it->second;
  // Only upward steps change the value: u is an inclusion.
  HeckeElement value = x_I(sys_, p.start());
  Subset at = p.start();
  for (std::size_t i = 1; i < p.v.size(); ++i) {
    Subset next = p.v[i];
    if (!is_step(at, next)) throw Error(ErrorKind::BadPath, "not a covering step in " + p.str());
    if (subset_of(at, next)) value = x_I(sys_, next) * left_divide_by_xJ(at, value);
    at = next;
  }
  HomElement h{p.start(), p.end(), std::move(value)};
  memo_.emplace(p, h);
  return h;
}

HomElement PathEvaluator::eval(const PathElement& p) {
  HomElement out = zero_hom(sys_, p.source(), p.target());
  for (const auto& [path, c] : p.terms()) out += eval(path) * c;
  return out;
}

HomElement eval_path(const SystemPtr& sys, const PathElement& p) {
  PathEvaluator ev(sys);
  return ev.eval(p);
}

namespace {

bool is_valley(const std::vector<Subset>& tp, std::size_t i) {
  return i > 0 && i + 1 < tp.size() && subset_of(tp[i], tp[i - 1]) && subset_of(tp[i], tp[i + 1]);
}

// Drops repeated and collinear interior turning points.
void tidy(std::vector<Subset>& tp) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i < tp.size(); ++i) {
      if (tp[i] == tp[i - 1]) {
        tp.erase(tp.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
    if (changed) continue;
    for (std::size_t i = 1; i + 1 < tp.size(); ++i) {
      bool rising = subset_of(tp[i - 1], tp[i]) && subset_of(tp[i], tp[i + 1]);
      bool falling = subset_of(tp[i], tp[i - 1]) && subset_of(tp[i + 1], tp[i]);
      if (rising || falling) {
        tp.erase(tp.begin() + static_cast<long>(i));
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

NormalForm normalize(const CoxeterSystem& sys, const Path& p) {
  NormalForm nf;
  std::vector<Subset> tp = p.turning_points();
  tidy(tp);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 1; i + 1 < tp.size(); ++i) {
      if (!is_valley(tp, i)) continue;
      Subset meet = tp[i - 1] & tp[i + 1];
      if (meet == tp[i]) continue;
      nf.scalar *= exact_div(poincare_poly(sys, meet), poincare_poly(sys, tp[i]));
      nf.trace.push_back(TraceStep{"J1", static_cast<int>(i),
                                   "raise " + subset_str(tp[i]) + " to " + subset_str(meet)});
      tp[i] = meet;
      tidy(tp);
      changed = true;
      break;
    }
  }
  nf.path = from_turning_points(tp);
  if (nf.path != p && nf.trace.empty()) nf.trace.push_back(TraceStep{"J2", 0, "straighten"});
  return nf;
}

PathElement normalize(const CoxeterSystem& sys, const PathElement& p) {
  PathElement out(p.source(), p.target());
  for (const auto& [path, c] : p.terms()) {
    NormalForm nf = normalize(sys, path);
    out.add_term(nf.path, c * nf.scalar);
  }
  return out;
}

CornerImage corner_image(const SystemPtr& sys, const Path& loop) {
  if (loop.start() != 0 || loop.end() != 0)
    throw Error(ErrorKind::BadPath, "corner image needs a closed path at the empty set");
  NormalForm nf = normalize(*sys, loop);
  std::vector<Subset> tp = nf.path.turning_points();
  CornerImage out;
  for (std::size_t i = 1; i + 1 < tp.size(); ++i) {
    if (is_valley(tp, i) && tp[i] != 0) {
      out.multiplier *= poincare_poly(*sys, tp[i]);
      tp[i] = 0;
    }
  }
  // Peaks are now separated by ∅; the later peak multiplies on the left.
  HeckeElement value = HeckeElement::one(sys) * nf.scalar;
  for (std::size_t i = 1; i + 1 < tp.size(); ++i)
    if (tp[i] != 0) value = x_I(sys, tp[i]) * value;
  out.value = std::move(value);
  return out;
}

TorsionReport torsion_report(const SystemPtr& sys, const PathElement& p) {
  TorsionReport r;
  const Subset I = p.source(), J = p.target();
  r.annihilator = poincare_poly(*sys, I) * poincare_poly(*sys, J);
  std::vector<std::pair<IntPoly, CornerImage>> parts;
  std::set<IntPoly> multipliers;
  for (const auto& [path, c] : p.terms()) {
    Path loop = then(then(delta(I, 0), path), upsilon(0, J));
    CornerImage ci = corner_image(sys, loop);
    multipliers.insert(ci.multiplier);
    parts.emplace_back(c, std::move(ci));
  }
  for (const auto& m : multipliers) r.multiplier *= m;
  r.residual = HeckeElement(sys);
  for (const auto& [c, ci] : parts)
    r.residual += ci.value * (c * exact_div(r.multiplier, ci.multiplier));
  r.torsion = r.residual.is_zero();
  return r;
}

bool torsion_check(const SystemPtr& sys, const PathElement& p) {
  return torsion_report(sys, p).torsion;
}

}  // namespace hecke
