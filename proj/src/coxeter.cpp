#include "hecke/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>
#include <sstream>

#include "json.hpp"

namespace hecke {

std::string subset_str(Subset a) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 32; ++i) {
    if (!contains(a, i)) continue;
    if (!first) out += ",";
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

Subset parse_subset(const std::string& text, int rank) {
  Subset out = 0;
  std::string digits;
  for (char c : text) {
    if (c == '{' || c == '}' || c == ' ' || c == ',') {
      if (!digits.empty()) {
        int v = std::stoi(digits);
        if (v < 1 || v > rank) throw Error(ErrorKind::BadInput, "generator out of range: " + text);
        out |= singleton(v - 1);
        digits.clear();
      }
      continue;
    }
    if (c == 'e' || c == '0') continue;
    if (c < '0' || c > '9') throw Error(ErrorKind::BadInput, "bad subset: " + text);
    // Without separators every digit is one generator ("13" = {1,3}).
    if (text.find(',') == std::string::npos) {
      int v = c - '0';
      if (v < 1 || v > rank) throw Error(ErrorKind::BadInput, "generator out of range: " + text);
      out |= singleton(v - 1);
    } else {
      digits += c;
    }
  }
  if (!digits.empty()) {
    int v = std::stoi(digits);
    if (v < 1 || v > rank) throw Error(ErrorKind::BadInput, "generator out of range: " + text);
    out |= singleton(v - 1);
  }
  return out;
}

namespace {

// Todd-Coxeter over the trivial subgroup. Every generator is an involution,
// so one column serves as its own inverse.
class CosetTable {
 public:
  CosetTable(int ngens, std::size_t limit) : ngens_(ngens), limit_(limit) { add_coset(); }

  void enumerate(const std::vector<std::vector<int>>& rels) {
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (const auto& r : rels) {
        if (!live(c)) break;
        scan_and_fill(static_cast<int>(c), r);
      }
      if (!live(c)) continue;
      for (int g = 0; g < ngens_; ++g) {
        if (table_[c][g] < 0) define(static_cast<int>(c), g);
      }
    }
  }

  // Right action on the surviving cosets, renumbered densely.
  std::vector<std::vector<int>> compact() const {
    std::vector<int> index(table_.size(), -1);
    int n = 0;
    for (std::size_t c = 0; c < table_.size(); ++c)
      if (live(c)) index[c] = n++;
    std::vector<std::vector<int>> out(n, std::vector<int>(ngens_));
    for (std::size_t c = 0; c < table_.size(); ++c) {
      if (!live(c)) continue;
      for (int g = 0; g < ngens_; ++g) out[index[c]][g] = index[table_[c][g]];
    }
    return out;
  }

 private:
  bool live(std::size_t c) const { return forward_[c] < 0; }

  int add_coset() {
    if (table_.size() >= limit_)
      throw Error(ErrorKind::NonFiniteGroup, "coset enumeration exceeded its budget");
    table_.emplace_back(ngens_, -1);
    forward_.push_back(-1);
    return static_cast<int>(table_.size()) - 1;
  }

  void define(int c, int g) {
    int d = add_coset();
    table_[c][g] = d;
    table_[d][g] = c;
  }

  int rep(int c) {
    int r = c;
    while (forward_[r] >= 0) r = forward_[r];
    while (forward_[c] >= 0) {
      int next = forward_[c];
      forward_[c] = r;
      c = next;
    }
    return r;
  }

  void merge(int a, int b, std::deque<int>& queue) {
    a = rep(a);
    b = rep(b);
    if (a == b) return;
    if (a > b) std::swap(a, b);
    forward_[b] = a;
    queue.push_back(b);
  }

  void coincidence(int a, int b) {
    std::deque<int> queue;
    merge(a, b, queue);
    while (!queue.empty()) {
      int dead = queue.front();
      queue.pop_front();
      for (int g = 0; g < ngens_; ++g) {
        int d = table_[dead][g];
        if (d < 0) continue;
        table_[dead][g] = -1;
        if (table_[d][g] == dead) table_[d][g] = -1;
        int mu = rep(dead);
        int nu = rep(d);
        if (table_[mu][g] >= 0) {
          merge(nu, table_[mu][g], queue);
        } else if (table_[nu][g] >= 0) {
          merge(mu, table_[nu][g], queue);
        } else {
          table_[mu][g] = nu;
          table_[nu][g] = mu;
        }
      }
    }
  }

  void scan_and_fill(int c, const std::vector<int>& r) {
    int f = c, b = c;
    int i = 0, j = static_cast<int>(r.size()) - 1;
    while (true) {
      while (i <= j && table_[f][r[i]] >= 0) f = table_[f][r[i++]];
      if (i > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= i && table_[b][r[j]] >= 0) b = table_[b][r[j--]];
      if (j < i) {
        coincidence(f, b);
        return;
      }
      if (i == j) {
        table_[f][r[i]] = b;
        table_[b][r[i]] = f;
        return;
      }
      define(f, r[i]);
    }
  }

  int ngens_;
  std::size_t limit_;
  std::vector<std::vector<int>> table_;
  std::vector<int> forward_;
};

void validate(const CoxeterMatrix& m) {
  const std::size_t n = m.size();
  if (n == 0 || n > 16) throw Error(ErrorKind::BadMatrix, "rank must be between 1 and 16");
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw Error(ErrorKind::BadMatrix, "matrix is not square");
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (m[i][j] != m[j][i]) throw Error(ErrorKind::BadMatrix, "matrix is not symmetric");
      if (i == j && m[i][j] != 1) throw Error(ErrorKind::BadMatrix, "diagonal entries must be 1");
      if (i != j && m[i][j] < 2)
        throw Error(ErrorKind::BadMatrix, "off-diagonal entries must be at least 2");
    }
  }
}

}  // namespace

std::shared_ptr<const CoxeterSystem> CoxeterSystem::build(const CoxeterMatrix& m,
                                                          std::size_t cap) {
  validate(m);
  const int n = static_cast<int>(m.size());
  std::vector<std::vector<int>> rels;
  for (int s = 0; s < n; ++s) {
    for (int t = s + 1; t < n; ++t) {
      std::vector<int> r;
      for (int k = 0; k < m[s][t]; ++k) {
        r.push_back(s);
        r.push_back(t);
      }
      rels.push_back(std::move(r));
    }
  }
  // Short relators first keeps the table small.
  std::stable_sort(rels.begin(), rels.end(),
                   [](const auto& a, const auto& b) { return a.size() < b.size(); });

  CosetTable ct(n, std::max<std::size_t>(cap * 64, 4096));
  ct.enumerate(rels);
  auto action = ct.compact();
  if (action.size() > cap)
    throw Error(ErrorKind::NonFiniteGroup,
                "group order " + std::to_string(action.size()) + " exceeds cap " +
                    std::to_string(cap));

  std::shared_ptr<CoxeterSystem> sys(new CoxeterSystem());
  sys->rank_ = n;
  sys->m_ = m;
  sys->fingerprint_ = "coxeter:" + nlohmann::json(m).dump();

  // BFS in generator order: ids follow ShortLex order of the normal forms.
  const std::size_t N = action.size();
  std::vector<int> id_of(N, -1);
  std::vector<int> coset_of;
  id_of[0] = 0;
  coset_of.push_back(0);
  sys->word_.push_back({});
  sys->len_.push_back(0);
  for (std::size_t k = 0; k < coset_of.size(); ++k) {
    int c = coset_of[k];
    for (int g = 0; g < n; ++g) {
      int d = action[c][g];
      if (id_of[d] >= 0) continue;
      id_of[d] = static_cast<int>(coset_of.size());
      coset_of.push_back(d);
      auto w = sys->word_[k];
      w.push_back(g);
      sys->word_.push_back(std::move(w));
      sys->len_.push_back(sys->len_[k] + 1);
    }
  }
  sys->right_.assign(N, std::vector<Elem>(n));
  for (std::size_t k = 0; k < N; ++k)
    for (int g = 0; g < n; ++g) sys->right_[k][g] = id_of[action[coset_of[k]][g]];

  auto fold = [&](Elem start, const std::vector<int>& letters) {
    Elem w = start;
    for (int g : letters) w = sys->right_[w][g];
    return w;
  };
  sys->left_.assign(N, std::vector<Elem>(n));
  sys->inv_.assign(N, 0);
  sys->ldes_.assign(N, 0);
  sys->rdes_.assign(N, 0);
  sys->supp_.assign(N, 0);
  for (std::size_t k = 0; k < N; ++k) {
    const auto& w = sys->word_[k];
    for (int g = 0; g < n; ++g) sys->left_[k][g] = fold(sys->right_[0][g], w);
    sys->inv_[k] = fold(0, std::vector<int>(w.rbegin(), w.rend()));
    for (int g : w) sys->supp_[k] |= singleton(g);
  }
  for (std::size_t k = 0; k < N; ++k) {
    for (int g = 0; g < n; ++g) {
      if (sys->len_[sys->left_[k][g]] < sys->len_[k]) sys->ldes_[k] |= singleton(g);
      if (sys->len_[sys->right_[k][g]] < sys->len_[k]) sys->rdes_[k] |= singleton(g);
    }
  }
  sys->longest_.assign(std::size_t{1} << n, 0);
  for (std::size_t k = 0; k < N; ++k) {
    for (Subset I = 0; I < (Subset{1} << n); ++I) {
      if (subset_of(sys->supp_[k], I) && sys->len_[k] > sys->len_[sys->longest_[I]])
        sys->longest_[I] = static_cast<Elem>(k);
    }
  }
  return sys;
}

CoxeterMatrix CoxeterSystem::named_matrix(const std::string& type) {
  auto fill = [](int n) {
    CoxeterMatrix m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
  };
  auto bad = [&]() { return Error(ErrorKind::BadMatrix, "unknown Coxeter type: " + type); };
  if (type.size() >= 5 && type.rfind("I2(", 0) == 0 && type.back() == ')') {
    int k = 0;
    try {
      k = std::stoi(type.substr(3, type.size() - 4));
    } catch (const std::exception&) {
      throw bad();
    }
    if (k < 2) throw bad();
    auto m = fill(2);
    m[0][1] = m[1][0] = k;
    return m;
  }
  if (type == "G2") return named_matrix("I2(6)");
  if (type.size() < 2) throw bad();
  char family = type[0];
  int n = 0;
  try {
    std::size_t used = 0;
    n = std::stoi(type.substr(1), &used);
    if (used != type.size() - 1) throw bad();
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw bad();
  }
  if (n < 1 || n > 16) throw bad();
  auto m = fill(n);
  auto link = [&](int a, int b, int v) { m[a][b] = m[b][a] = v; };
  switch (family) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
      return m;
    case 'B':
    case 'C':
      if (n < 2) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
      link(n - 2, n - 1, 4);
      return m;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; ++i) link(i, i + 1, 3);
      link(n - 3, n - 1, 3);
      return m;
    case 'H':
      if (n != 3 && n != 4) throw bad();
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1, 3);
      link(0, 1, 5);
      return m;
    case 'F':
      if (n != 4) throw bad();
      link(0, 1, 3);
      link(1, 2, 4);
      link(2, 3, 3);
      return m;
    default:
      throw bad();
  }
}

SystemPtr make_system(const std::string& type, std::size_t cap) {
  CoxeterMatrix m;
  std::string name = type;
  if (!type.empty() && type.front() == '[') {
    try {
      m = nlohmann::json::parse(type).get<CoxeterMatrix>();
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorKind::BadMatrix, std::string("cannot parse matrix: ") + e.what());
    }
    name = "custom";
  } else {
    m = CoxeterSystem::named_matrix(type);
  }
  auto sys = CoxeterSystem::build(m, cap);
  const_cast<CoxeterSystem&>(*sys).set_name(name);
  return sys;
}

std::string CoxeterSystem::word_str(Elem w) const {
  if (word_[w].empty()) return "e";
  std::string out;
  for (int g : word_[w]) out += std::to_string(g + 1);
  return out;
}

Elem CoxeterSystem::multiply(Elem x, Elem y) const {
  Elem w = x;
  for (int g : word_[y]) w = right_[w][g];
  return w;
}

Elem CoxeterSystem::from_word(const std::vector<int>& letters) const {
  Elem w = 0;
  for (int g : letters) {
    if (g < 0 || g >= rank_) throw Error(ErrorKind::BadInput, "generator out of range");
    w = right_[w][g];
  }
  return w;
}

void CoxeterSystem::build_bruhat() const {
  std::call_once(bruhat_once_, [this]() {
    const std::size_t N = order();
    const std::size_t words = (N + 63) / 64;
    below_.assign(N, std::vector<std::uint64_t>(words, 0));
    below_[0][0] = 1;
    // {x <= w} = {x <= ws} ∪ {xs : x <= ws} with s the last letter of w.
    for (std::size_t k = 1; k < N; ++k) {
      int s = word_[k].back();
      Elem prefix = right_[k][s];
      auto& mine = below_[k];
      const auto& base = below_[prefix];
      for (std::size_t b = 0; b < words; ++b) {
        std::uint64_t bits = base[b];
        mine[b] |= bits;
        while (bits) {
          int off = __builtin_ctzll(bits);
          bits &= bits - 1;
          Elem x = static_cast<Elem>(b * 64 + off);
          Elem xs = right_[x][s];
          mine[xs / 64] |= std::uint64_t{1} << (xs % 64);
        }
      }
    }
  });
}

bool CoxeterSystem::bruhat_leq(Elem y, Elem w) const {
  if (len_[y] > len_[w]) return false;
  build_bruhat();
  return (below_[w][y / 64] >> (y % 64)) & 1u;
}

Elem CoxeterSystem::longest_element(Subset I) const {
  if (!subset_of(I, full())) throw Error(ErrorKind::BadInput, "subset outside S");
  return longest_[I];
}

std::vector<Elem> CoxeterSystem::parabolic(Subset I) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(order()); ++w)
    if (in_parabolic(w, I)) out.push_back(w);
  return out;
}

std::vector<Elem> CoxeterSystem::min_coset_reps(Subset I) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(order()); ++w)
    if ((ldes_[w] & I) == 0) out.push_back(w);
  return out;
}

std::vector<Elem> CoxeterSystem::double_coset_reps(Subset I, Subset J) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(order()); ++w)
    if ((ldes_[w] & I) == 0 && (rdes_[w] & J) == 0) out.push_back(w);
  return out;
}

std::vector<Elem> CoxeterSystem::double_coset_reps_longest(Subset I, Subset J) const {
  std::vector<Elem> out;
  for (Elem w = 0; w < static_cast<Elem>(order()); ++w)
    if (subset_of(I, ldes_[w]) && subset_of(J, rdes_[w])) out.push_back(w);
  return out;
}

std::vector<Elem> CoxeterSystem::double_coset(Subset I, Elem d, Subset J) const {
  std::vector<char> seen(order(), 0);
  std::vector<Elem> out;
  for (Elem u : parabolic(I)) {
    Elem ud = multiply(u, d);
    for (Elem v : parabolic(J)) {
      Elem w = multiply(ud, v);
      if (!seen[w]) {
        seen[w] = 1;
        out.push_back(w);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Elem CoxeterSystem::double_coset_min(Subset I, Elem w, Subset J) const {
  // Strip descents on either side until none remain in I (left) or J (right).
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < rank_; ++s) {
      if (contains(I, s) && contains(ldes_[w], s)) {
        w = left_[w][s];
        changed = true;
      }
      if (contains(J, s) && contains(rdes_[w], s)) {
        w = right_[w][s];
        changed = true;
      }
    }
  }
  return w;
}

Elem CoxeterSystem::double_coset_max(Subset I, Elem w, Subset J) const {
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < rank_; ++s) {
      if (contains(I, s) && !contains(ldes_[w], s)) {
        w = left_[w][s];
        changed = true;
      }
      if (contains(J, s) && !contains(rdes_[w], s)) {
        w = right_[w][s];
        changed = true;
      }
    }
  }
  return w;
}

bool CoxeterSystem::is_min_double(Subset I, Elem d, Subset J) const {
  return (ldes_[d] & I) == 0 && (rdes_[d] & J) == 0;
}

bool CoxeterSystem::is_max_double(Subset I, Elem d, Subset J) const {
  return subset_of(I, ldes_[d]) && subset_of(J, rdes_[d]);
}

Subset CoxeterSystem::intersect_parabolic(Subset I, Elem d, Subset J) const {
  if (!is_min_double(I, d, J))
    throw Error(ErrorKind::NotDistinguished,
                word_str(d) + " is not a minimal " + subset_str(I) + "-" + subset_str(J) +
                    " double-coset representative");
  Subset K = 0;
  const Elem dinv = inv_[d];
  for (int s = 0; s < rank_; ++s) {
    if (!contains(J, s)) continue;
    Elem conj = multiply(multiply(d, gen(s)), dinv);
    if (in_parabolic(conj, I)) K |= singleton(s);
  }
  return K;
}

Elem CoxeterSystem::demazure(Elem x, Elem y) const {
  Elem w = y;
  const auto& letters = word_[x];
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!contains(ldes_[w], *it)) w = left_[w][*it];
  }
  return w;
}

std::vector<Subset> CoxeterSystem::lambda() const {
  std::vector<Subset> out;
  for (Subset I = 0; I <= full(); ++I) out.push_back(I);
  std::stable_sort(out.begin(), out.end(), [](Subset a, Subset b) {
    if (subset_size(a) != subset_size(b)) return subset_size(a) < subset_size(b);
    return a < b;
  });
  return out;
}

void CoxeterSystem::check_same(const CoxeterSystem& other) const {
  if (this != &other && fingerprint_ != other.fingerprint_)
    throw Error(ErrorKind::SystemMismatch, "elements belong to different Coxeter systems");
}

}  // namespace hecke
