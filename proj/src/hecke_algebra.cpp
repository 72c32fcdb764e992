#include "hecke/hecke_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

HeckeElement HeckeElement::basis(const SystemPtr& sys, Elem w, const IntPoly& c) {
  HeckeElement h(sys);
  h.add_term(w, c);
  return h;
}

IntPoly HeckeElement::coeff(Elem w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? IntPoly() : it->second;
}

void HeckeElement::add_term(Elem w, const IntPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HeckeElement::require(const HeckeElement& o) const {
  if (sys_ && o.sys_) sys_->check_same(*o.sys_);
}

HeckeElement HeckeElement::right_mul_gen(int s) const {
  HeckeElement out(sys_);
  const IntPoly qm1 = IntPoly{-1, 1};
  const IntPoly q = IntPoly::q();
  for (const auto& [w, c] : terms_) {
    Elem ws = sys_->rmul(w, s);
    if (sys_->length(ws) > sys_->length(w)) {
      out.add_term(ws, c);
    } else {
      out.add_term(w, qm1 * c);
      out.add_term(ws, q * c);
    }
  }
  return out;
}

HeckeElement HeckeElement::left_mul_gen(int s) const {
  HeckeElement out(sys_);
  const IntPoly qm1 = IntPoly{-1, 1};
  const IntPoly q = IntPoly::q();
  for (const auto& [w, c] : terms_) {
    Elem sw = sys_->lmul(s, w);
    if (sys_->length(sw) > sys_->length(w)) {
      out.add_term(sw, c);
    } else {
      out.add_term(w, qm1 * c);
      out.add_term(sw, q * c);
    }
  }
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (!sys_) sys_ = o.sys_;
  require(o);
  for (const auto& [w, c] : o.terms_) add_term(w, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  if (!sys_) sys_ = o.sys_;
  require(o);
  for (const auto& [w, c] : o.terms_) add_term(w, -c);
  return *this;
}

HeckeElement& HeckeElement::operator*=(const IntPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, v] : terms_) v *= c;
  return *this;
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(*this);
  for (auto& [w, v] : out.terms_) v = -v;
  return out;
}

HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.require(b);
  const SystemPtr& sys = a.sys_ ? a.sys_ : b.sys_;
  HeckeElement out(sys);
  if (a.is_zero() || b.is_zero()) return out;
  // a*T_y for y in the support of b, built along ShortLex prefixes:
  // the normal form of y drops its last letter to a normal form.
  std::map<Elem, HeckeElement> memo;
  memo.emplace(0, a);
  auto get = [&](auto&& self, Elem y) -> const HeckeElement& {
    auto it = memo.find(y);
    if (it != memo.end()) return it->second;
    int s = sys->word(y).back();
    const HeckeElement& prev = self(self, sys->rmul(y, s));
    return memo.emplace(y, prev.right_mul_gen(s)).first->second;
  };
  for (const auto& [y, c] : b.terms_) {
    const HeckeElement& ay = get(get, y);
    for (const auto& [w, v] : ay.terms_) out.add_term(w, v * c);
  }
  return out;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  if (a.sys_ && b.sys_) a.sys_->check_same(*b.sys_);
  return a.terms_ == b.terms_;
}

std::string HeckeElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    std::string name = "T_" + sys_->word_str(w);
    if (c == IntPoly(1)) {
      os << name;
    } else {
      os << "(" << c.str() << ")*" << name;
    }
  }
  return os.str();
}

HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b) { return a * b; }

HeckeElement iota(const HeckeElement& a) {
  HeckeElement out(a.system());
  for (const auto& [w, c] : a.terms()) out.add_term(a.system()->inverse(w), c);
  return out;
}

HeckeElement specialize_0(const HeckeElement& a) {
  HeckeElement out(a.system());
  for (const auto& [w, c] : a.terms()) out.add_term(w, IntPoly(c.constant_term()));
  return out;
}

IntPoly poincare_poly(const CoxeterSystem& sys, Subset I) {
  IntPoly p;
  for (Elem w : sys.parabolic(I)) p += IntPoly::q_power(sys.length(w));
  return p;
}

HeckeElement x_I(const SystemPtr& sys, Subset I) {
  HeckeElement h(sys);
  for (Elem w : sys->parabolic(I)) h.add_term(w, 1);
  return h;
}

HeckeElement x_gen(const SystemPtr& sys, int s) {
  HeckeElement h = HeckeElement::one(sys);
  h.add_term(sys->gen(s), 1);
  return h;
}

HeckeElement x_word(const SystemPtr& sys, const std::vector<int>& letters) {
  // Right-multiplying by 1 + T_s keeps every step linear in the support.
  HeckeElement h = HeckeElement::one(sys);
  for (int s : letters) h += h.right_mul_gen(s);
  return h;
}

std::vector<int> alternating_word(int s, int t, int i, int last) {
  int other = last == s ? t : s;
  std::vector<int> w(i);
  for (int k = 0; k < i; ++k) w[i - 1 - k] = (k % 2 == 0) ? last : other;
  return w;
}

HeckeElement dihedral_x_m(const SystemPtr& sys, int s, int t, int m) {
  if (s == t || s < 0 || t < 0 || s >= sys->rank() || t >= sys->rank())
    throw Error(ErrorKind::BadInput, "dihedral_x_m needs two distinct generators");
  if (m < 1 || m > sys->m(s, t))
    throw Error(ErrorKind::OutOfRange, "m = " + std::to_string(m) + " outside 1.." +
                                           std::to_string(sys->m(s, t)));
  HeckeElement h = HeckeElement::one(sys);
  for (int i = 1; i < m; ++i) {
    h.add_term(sys->from_word(alternating_word(s, t, i, s)), 1);
    h.add_term(sys->from_word(alternating_word(s, t, i, t)), 1);
  }
  h.add_term(sys->from_word(alternating_word(s, t, m, t)), 1);
  return h;
}

IntPoly b_coeff(int m, int j) {
  if (j < 1 || j > m || (m - j) % 2 != 0) return IntPoly();
  int k = (m - j) / 2;
  Integer binom;
  mpz_bin_uiui(binom.get_mpz_t(), j + k - 1, j - 1);
  if (k % 2) binom = -binom;
  return IntPoly::q_power(k, binom);
}

std::vector<Subset> default_chain(Subset I) {
  std::vector<Subset> chain;
  Subset acc = 0;
  for (int s = 0; s < 32; ++s) {
    if (contains(I, s)) {
      acc |= singleton(s);
      chain.push_back(acc);
    }
  }
  return chain;
}

namespace {

// Lexicographically first set of positions in `word` spelling a reduced word of v.
std::vector<int> first_reduced_subword(const CoxeterSystem& sys, const std::vector<int>& word,
                                       Elem v) {
  const int n = static_cast<int>(word.size());
  const int target = sys.length(v);
  std::vector<int> picked;
  std::vector<int> best;
  // DFS in lexicographic order of position sets; reduced prefixes only.
  auto dfs = [&](auto&& self, int from, Elem cur) -> bool {
    if (static_cast<int>(picked.size()) == target) {
      if (cur == v) {
        best = picked;
        return true;
      }
      return false;
    }
    for (int p = from; p < n; ++p) {
      if (n - p < target - static_cast<int>(picked.size())) break;
      Elem next = sys.rmul(cur, word[p]);
      if (sys.length(next) <= sys.length(cur)) continue;
      if (!sys.bruhat_leq(next, v)) continue;
      picked.push_back(p);
      if (self(self, p + 1, next)) return true;
      picked.pop_back();
    }
    return false;
  };
  if (!dfs(dfs, 0, sys.identity())) return {};
  return best;
}

}  // namespace

GeneratorExpansion kl_generator_expansion(const SystemPtr& sys, const std::vector<Subset>& chain) {
  GeneratorExpansion out;
  if (chain.empty()) return out;
  Subset prev = 0;
  for (Subset c : chain) {
    if (!subset_of(prev, c) || subset_size(c) != subset_size(prev) + 1 || !subset_of(c, sys->full()))
      throw Error(ErrorKind::BadInput, "ordering is not a maximal chain of covering subsets");
    prev = c;
  }
  out.I = chain.back();
  out.chain = chain;

  // word = u_m ... u_1 with u_i = w_{I_i} w_{I_{i-1}}^{-1}.
  Subset below = 0;
  for (Subset c : chain) {
    Elem u = sys->multiply(sys->longest_element(c), sys->inverse(sys->longest_element(below)));
    std::vector<int> w = sys->word(u);
    out.word.insert(out.word.begin(), w.begin(), w.end());
    below = c;
  }
  if (sys->from_word(out.word) != sys->longest_element(out.I) ||
      static_cast<int>(out.word.size()) != sys->length(sys->longest_element(out.I)))
    throw Error(ErrorKind::NoExpansion, "chain word is not a reduced word of w_I");

  HeckeElement rest = x_I(sys, out.I) - x_word(sys, out.word);
  std::map<std::vector<int>, IntPoly> acc;
  std::size_t guard = 0;
  while (!rest.is_zero()) {
    if (++guard > 4 * sys->order() + 16)
      throw Error(ErrorKind::NoExpansion, "elimination did not terminate");
    // Longest support element; ShortLex-last among equals (ids are ShortLex).
    Elem top = rest.terms().begin()->first;
    for (const auto& [w, c] : rest.terms())
      if (sys->length(w) > sys->length(top) || (sys->length(w) == sys->length(top) && w > top))
        top = w;
    IntPoly c = rest.coeff(top);
    std::vector<int> pos = first_reduced_subword(*sys, out.word, top);
    if (pos.empty() && top != sys->identity())
      throw Error(ErrorKind::NoExpansion, "no subword spells " + sys->word_str(top));
    IntPoly a;
    try {
      a = exact_div(c, IntPoly::q());
    } catch (const NotDivisibleError&) {
      throw Error(ErrorKind::NoExpansion, "coefficient of " + sys->word_str(top) +
                                              " is not divisible by q");
    }
    std::vector<int> letters;
    for (int p : pos) letters.push_back(out.word[p]);
    rest -= x_word(sys, letters) * c;
    acc[letters] += a;
  }
  for (auto& [letters, a] : acc)
    if (!a.is_zero()) out.corrections.emplace_back(letters, a);
  // Longest subwords first, then lexicographic.
  std::stable_sort(out.corrections.begin(), out.corrections.end(),
                   [](const auto& l, const auto& r) { return l.first.size() > r.first.size(); });
  if (!(expand(sys, out) == x_I(sys, out.I)))
    throw Error(ErrorKind::NoExpansion, "expansion does not reproduce x_I");
  return out;
}

HeckeElement expand(const SystemPtr& sys, const GeneratorExpansion& e) {
  HeckeElement h = x_word(sys, e.word);
  for (const auto& [letters, a] : e.corrections) h += x_word(sys, letters) * (a * IntPoly::q());
  return h;
}

Elem c0_mul(const CoxeterSystem& sys, Elem x, Elem y) { return sys.demazure(x, y); }

}  // namespace hecke
