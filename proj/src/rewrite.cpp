#include "hecke/rewrite.hpp"

#include <algorithm>
#include <functional>

namespace hecke {

namespace {

constexpr int kMaxDepth = 64;

int only_element(Subset a) {
  for (int s = 0; s < 32; ++s)
    if (contains(a, s)) return s;
  return -1;
}

// v[0..i) + q + v(j..]
Path splice(const Path& p, std::size_t i, std::size_t j, const Path& q) {
  Path out;
  out.v.assign(p.v.begin(), p.v.begin() + static_cast<long>(i));
  out.v.insert(out.v.end(), q.v.begin(), q.v.end());
  out.v.insert(out.v.end(), p.v.begin() + static_cast<long>(j) + 1, p.v.end());
  return out;
}

Path slice(const Path& p, std::size_t i, std::size_t j) {
  return Path{{p.v.begin() + static_cast<long>(i), p.v.begin() + static_cast<long>(j) + 1}};
}

[[noreturn]] void stuck(const Path& p, const std::string& why) {
  throw Error(ErrorKind::StuckPath, "no rule applies to [" + p.str() + "]: " + why);
}

}  // namespace

Rewriter::Rewriter(SystemPtr sys)
    : sys_(std::move(sys)), std_(sys_), eval_(sys_), kind_(classify(*sys_)) {
  if (kind_ == SystemKind::A3) {
    RelationSet rs = relation_set(sys_);
    for (const char* fam : {"T3", "T4"})
      for (const Relation* r : rs.family(fam))
        middle_rules_.push_back(MiddleRule{r->family, r->lhs.terms().begin()->first, r->rhs});
  }
}

void Rewriter::note(const std::string& rule, int position, const std::string& detail) {
  trace_.push_back(TraceStep{rule, position, detail});
}

PathElement Rewriter::rewrite(const PathElement& p) {
  trace_.clear();
  PathElement out(p.source(), p.target());
  for (const auto& [path, c] : p.terms()) out += std_of(path, 0) * c;
  return out;
}

PathElement Rewriter::std_of(const Path& p, int depth) {
  if (depth > kMaxDepth) stuck(p, "depth bound exceeded");
  NormalForm nf = normalize(*sys_, p);
  for (const auto& t : nf.trace) trace_.push_back(t);
  if (std_.is_standard(nf.path)) return PathElement(nf.path, nf.scalar);
  if (nf.path.visits(0)) return through_empty(nf.scalar, nf.path, depth);
  if (nf.path.visits(sys_->full())) stuck(nf.path, "path through S is not a hook");
  if (kind_ == SystemKind::A3) return middle(nf.scalar, nf.path, depth);
  stuck(nf.path, "non-standard path avoiding the empty set");
}

PathElement Rewriter::through_empty(const IntPoly& c, const Path& p, int depth) {
  std::size_t first = p.v.size(), last = 0;
  for (std::size_t i = 0; i < p.v.size(); ++i)
    if (p.v[i] == 0) {
      first = std::min(first, i);
      last = i;
    }
  const Subset I = p.start(), J = p.end();
  HeckeElement y = iota(corner(tau(slice(p, last, p.v.size() - 1)), depth)) *
                   corner(slice(p, first, last), depth) * corner(slice(p, 0, first), depth);
  y = y * c;
  note("corner", static_cast<int>(first), subset_str(J) + " <- " + subset_str(I));

  // Absorb x_s into δ_J (s in J) or υ_I (s in I), longest terms first.
  const IntPoly qp1{1, 1};
  std::map<std::pair<int, Elem>, IntPoly, std::greater<>> pending;
  auto push = [&](Elem w, const IntPoly& a) {
    if (a.is_zero()) return;
    auto key = std::make_pair(sys_->length(w), w);
    auto [it, inserted] = pending.try_emplace(key, a);
    if (!inserted) {
      it->second += a;
      if (it->second.is_zero()) pending.erase(it);
    }
  };
  for (const auto& [w, a] : monomials(y)) push(w, a);
  std::map<Elem, IntPoly> keys;
  while (!pending.empty()) {
    auto node = pending.extract(pending.begin());
    const Elem w = node.key().second;
    const IntPoly a = node.mapped();
    if (Subset l = sys_->descents_left(w) & J) {
      const int s = only_element(l);
      const Elem sw = sys_->lmul(s, w);
      push(sw, qp1 * a);
      for (const auto& [u, e] : monomials(x_gen(sys_, s) * x_mono(sw) - x_mono(w))) push(u, -(a * e));
      continue;
    }
    if (Subset r = sys_->descents_right(w) & I) {
      const int s = only_element(r);
      const Elem ws = sys_->rmul(w, s);
      push(ws, qp1 * a);
      for (const auto& [u, e] : monomials(x_mono(ws) * x_gen(sys_, s) - x_mono(w))) push(u, -(a * e));
      continue;
    }
    keys[w] += a;
  }
  PathElement out(I, J);
  for (const auto& [w, a] : keys)
    if (!a.is_zero()) out += key(I, w, J) * a;
  return out;
}

PathElement Rewriter::middle(const IntPoly& c, const Path& p, int depth) {
  const auto& v = p.v;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    if (subset_size(v[i]) != 2 || subset_size(v[i - 1]) != 1 || subset_size(v[i + 1]) != 1) continue;
    const int s = only_element(v[i - 1]);
    const int t = only_element(v[i] & ~v[i - 1]);
    const bool odd = sys_->m(s, t) % 2 == 1;
    if (odd != (v[i - 1] == v[i + 1])) continue;
    Relation rb = refined_braid(*sys_, s, t);
    note("refined-braid", static_cast<int>(i - 1), rb.id);
    PathElement out(p.start(), p.end());
    for (const auto& [q, b] : rb.rhs.terms()) out += std_of(splice(p, i - 1, i + 1, q), depth + 1) * (b * c);
    return out;
  }
  for (const auto& rule : middle_rules_) {
    const Path& lhs = rule.lhs;
    const PathElement& rhs = rule.rhs;
    const std::size_t n = lhs.v.size();
    for (std::size_t i = 0; i + n <= v.size(); ++i) {
      if (!std::equal(lhs.v.begin(), lhs.v.end(), v.begin() + static_cast<long>(i))) continue;
      note(rule.family, static_cast<int>(i), lhs.str());
      PathElement out(p.start(), p.end());
      for (const auto& [q, b] : rhs.terms()) out += std_of(splice(p, i, i + n - 1, q), depth + 1) * (b * c);
      return out;
    }
  }
  stuck(p, "no convertible hook and no T3/T4 pattern");
}

HeckeElement Rewriter::corner(const Path& r) { return corner(r, 0); }

HeckeElement Rewriter::corner(const Path& r, int depth) {
  if (depth > kMaxDepth) stuck(r, "corner recursion bound exceeded");
  if (r.end() != 0) throw Error(ErrorKind::BadPath, "corner needs a path ending at the empty set");
  NormalForm nf = normalize(*sys_, r);
  const Path& p = nf.path;
  const HeckeElement one = HeckeElement::one(sys_);
  if (p.v.size() == 1) return one * nf.scalar;
  for (std::size_t i = 1; i + 1 < p.v.size(); ++i)
    if (p.v[i] == 0)
      return corner(slice(p, i, p.v.size() - 1), depth + 1) * corner(slice(p, 0, i), depth + 1) *
             nf.scalar;
  std::vector<Subset> tp = p.turning_points();
  if (tp.size() == 2) return one * nf.scalar;
  const Subset K = tp[tp.size() - 2], L = tp[tp.size() - 3];
  if (L == 0) return x_I(sys_, K) * nf.scalar;
  const Path prefix = from_turning_points({tp.begin(), tp.end() - 2});
  note("hook", static_cast<int>(tp.size() - 3), subset_str(L) + " < " + subset_str(K));
  HeckeElement out(sys_);
  for (const auto& [y, q] : hook(L, K)) out += y * corner(then(prefix, q), depth + 1);
  return out * nf.scalar;
}

// [L, K, ∅] = Σ Y_i Q_i with Q_i: L -> ∅.
std::vector<std::pair<HeckeElement, Path>> Rewriter::hook(Subset L, Subset K) {
  const IntPoly q = IntPoly::q();
  if (subset_size(K) == 2 && subset_size(L) == 1) {
    const int a = only_element(L);
    const int t = only_element(K & ~L);
    const int m = sys_->m(a, t);
    HeckeElement sum(sys_);
    for (int j = m % 2 == 0 ? 2 : 3; j <= m; ++j) {
      IntPoly b = b_coeff(m, j);
      if (!b.is_zero()) sum += x_word(sys_, alternating_word(a, t, j - 2, t)) * b;
    }
    HeckeElement y = x_gen(sys_, m % 2 == 0 ? t : a) * sum;
    if (m % 2 == 1)
      y += HeckeElement::one(sys_) * IntPoly::q_power((m - 1) / 2, (m - 1) / 2 % 2 == 0 ? 1 : -1);
    return {{y, Path{{L, 0}}}};
  }
  if (kind_ == SystemKind::A3 && K == sys_->full()) {
    const HeckeElement one = HeckeElement::one(sys_);
    const Subset s01 = 3, s02 = 5, s12 = 6;
    if (L == s02)
      return {{one, from_turning_points({s02, 4, s12, 2, s01, 0})},
              {one * (-q), from_turning_points({s02, 1, s01, 0})}};
    const Subset M = subset_of(L, s01) ? s01 : s12;
    const Path r = M == s01 ? from_turning_points({s01, 1, s02, 1, s01})
                            : from_turning_points({s12, 4, s02, 4, s12});
    const Path up = delta(M, L);
    return {{one, then(then(up, r), upsilon(0, M))},
            {one * (-(q * IntPoly{1, 1})), then(up, upsilon(0, M))}};
  }
  throw Error(ErrorKind::UnsupportedTorsion,
              "no hook rule for " + subset_str(L) + " < " + subset_str(K));
}

const HeckeElement& Rewriter::x_mono(Elem w) {
  auto it = x_mono_.find(w);
  if (it == x_mono_.end()) it = x_mono_.emplace(w, x_word(sys_, sys_->word(w))).first;
  return it->second;
}

std::map<Elem, IntPoly> Rewriter::monomials(HeckeElement y) {
  std::map<Elem, IntPoly> out;
  while (!y.is_zero()) {
    Elem top = y.terms().begin()->first;
    for (const auto& [w, c] : y.terms())
      if (sys_->length(w) > sys_->length(top) || (sys_->length(w) == sys_->length(top) && w > top))
        top = w;
    const IntPoly c = y.coeff(top);
    out[top] = c;
    y -= x_mono(top) * c;
  }
  return out;
}

const PathElement& Rewriter::key(Subset I, Elem w, Subset J) {
  auto k = std::make_tuple(I, w, J);
  auto it = keys_.find(k);
  if (it != keys_.end()) return it->second;
  const Path kp = then(then(upsilon(0, I), chi_word(sys_->word(w))), delta(J, 0));
  NormalForm nf = normalize(*sys_, kp);
  if (std_.is_standard(nf.path)) return keys_.emplace(k, PathElement(nf.path, nf.scalar)).first->second;

  const std::vector<Path>& basis = std_.at(I, J);
  const auto rows = eval_matrix(sys_, basis, I, J);
  const HomElement target = eval_.eval(kp);
  const std::vector<IntPoly> v = express_in_basis(target);
  const std::size_t n = basis.size();
  if (rows.size() != v.size())
    throw Error(ErrorKind::NotInSpan, "standard list for " + subset_str(I) + " -> " +
                                          subset_str(J) + " is not square");
  std::vector<std::vector<IntPoly>> a(n, std::vector<IntPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t r = 0; r < n; ++r) a[r][i] = rows[i][r];
  const IntPoly det = bareiss_det(a);
  if (det.is_zero()) throw Error(ErrorKind::NotInSpan, "standard paths are dependent");
  PathElement out(I, J);
  HomElement check = zero_hom(sys_, I, J);
  for (std::size_t i = 0; i < n; ++i) {
    auto ai = a;
    for (std::size_t r = 0; r < n; ++r) ai[r][i] = v[r];
    IntPoly ci;
    try {
      ci = exact_div(bareiss_det(ai), det);
    } catch (const NotDivisibleError&) {
      throw Error(ErrorKind::NotInSpan,
                  "[" + kp.str() + "] has non-integral standard coordinates");
    }
    out.add_term(basis[i], ci);
    check += eval_.eval(basis[i]) * ci;
  }
  if (!(check == target)) throw Error(ErrorKind::NotInSpan, "key solution failed to verify");
  note("key", 0, kp.str());
  return keys_.emplace(k, std::move(out)).first->second;
}

PathElement rewrite_to_standard(const SystemPtr& sys, const PathElement& p) {
  Rewriter rw(sys);
  return rw.rewrite(p);
}

}  // namespace hecke
