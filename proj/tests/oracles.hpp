#pragma once

// Reference computations kept deliberately naive. They only use the group
// tables (multiplication, length) and never call into the Hecke layer.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/hecke_algebra.hpp"
#include "hecke/poly.hpp"

namespace oracle {

using hecke::CoxeterSystem;
using hecke::Elem;
using hecke::IntPoly;
using hecke::Subset;
using Vec = std::map<Elem, IntPoly>;

inline void add(Vec& v, Elem w, const IntPoly& c) {
  IntPoly& slot = v[w];
  slot += c;
  if (slot.is_zero()) v.erase(w);
}

// v * T_s from the defining relations.
inline Vec times_gen(const CoxeterSystem& W, const Vec& v, int s) {
  Vec out;
  const IntPoly q = IntPoly::q();
  for (const auto& [w, c] : v) {
    const Elem ws = W.rmul(w, s);
    if (W.length(ws) > W.length(w)) {
      add(out, ws, c);
    } else {
      add(out, w, c * (q - 1));
      add(out, ws, c * q);
    }
  }
  return out;
}

inline Vec product(const CoxeterSystem& W, const Vec& a, const Vec& b) {
  Vec out;
  for (const auto& [y, cy] : b) {
    Vec part = a;
    for (int s : W.word(y)) part = times_gen(W, part, s);
    for (const auto& [w, c] : part) add(out, w, c * cy);
  }
  return out;
}

inline Vec from(const hecke::HeckeElement& h) { return Vec(h.terms().begin(), h.terms().end()); }

// Σ_{w∈W_I} q^{ℓ(w)} by closing {e} under the generators of I.
inline IntPoly poincare(const CoxeterSystem& W, Subset I) {
  std::set<Elem> seen{W.identity()};
  std::vector<Elem> todo{W.identity()};
  while (!todo.empty()) {
    const Elem w = todo.back();
    todo.pop_back();
    for (int s = 0; s < W.rank(); ++s)
      if (hecke::contains(I, s) && seen.insert(W.rmul(w, s)).second) todo.push_back(W.rmul(w, s));
  }
  IntPoly p;
  for (Elem w : seen) p += IntPoly::q_power(W.length(w));
  return p;
}

// Number of W_I \ W / W_J orbits, by flood fill.
inline std::size_t double_coset_count(const CoxeterSystem& W, Subset I, Subset J) {
  std::vector<int> label(W.order(), -1);
  std::size_t count = 0;
  for (Elem start = 0; start < static_cast<Elem>(W.order()); ++start) {
    if (label[start] >= 0) continue;
    std::vector<Elem> todo{start};
    label[start] = static_cast<int>(count);
    while (!todo.empty()) {
      const Elem w = todo.back();
      todo.pop_back();
      for (int s = 0; s < W.rank(); ++s) {
        for (Elem n : {hecke::contains(I, s) ? W.lmul(s, w) : w, hecke::contains(J, s) ? W.rmul(w, s) : w})
          if (label[n] < 0) {
            label[n] = static_cast<int>(count);
            todo.push_back(n);
          }
      }
    }
    ++count;
  }
  return count;
}

// KL polynomials from R-polynomials:
//   q^{ℓ(w)-ℓ(y)} P̄_{y,w} - P_{y,w} = Σ_{y<x≤w} R_{y,x} P_{x,w}
// and deg P_{y,w} ≤ (ℓ(w)-ℓ(y)-1)/2, which separates the two sides.
class KL {
 public:
  explicit KL(const CoxeterSystem& W) : n_(static_cast<Elem>(W.order())) {
    R_.assign(n_, std::vector<IntPoly>(n_));
    std::vector<Elem> by_length(n_);
    for (Elem w = 0; w < n_; ++w) by_length[w] = w;
    std::stable_sort(by_length.begin(), by_length.end(),
                     [&](Elem a, Elem b) { return W.length(a) < W.length(b); });
    const IntPoly q = IntPoly::q();
    for (Elem w : by_length) {
      if (w == W.identity()) {
        R_[w][w] = 1;
        continue;
      }
      int s = 0;
      while (W.length(W.lmul(s, w)) > W.length(w)) ++s;
      const Elem sw = W.lmul(s, w);
      for (Elem y = 0; y < n_; ++y) {
        const Elem sy = W.lmul(s, y);
        if (W.length(sy) < W.length(y))
          R_[y][w] = R_[sy][sw];
        else
          R_[y][w] = (q - 1) * R_[y][sw] + q * R_[sy][sw];
      }
    }
    P_.assign(n_, std::vector<IntPoly>(n_));
    for (Elem w = 0; w < n_; ++w) {
      std::vector<Elem> ys = by_length;
      std::reverse(ys.begin(), ys.end());
      for (Elem y : ys) {
        if (W.length(y) > W.length(w)) continue;
        if (y == w) {
          P_[y][w] = 1;
          continue;
        }
        IntPoly delta;
        for (Elem x = 0; x < n_; ++x)
          if (x != y && W.length(x) > W.length(y)) delta += R_[y][x] * P_[x][w];
        const int L = W.length(w) - W.length(y);
        std::vector<hecke::Integer> low;
        for (int k = 0; 2 * k <= L - 1; ++k) low.push_back(-delta.coeff(k));
        P_[y][w] = IntPoly(low);
      }
    }
  }
  const IntPoly& R(Elem y, Elem w) const { return R_[y][w]; }
  const IntPoly& P(Elem y, Elem w) const { return P_[y][w]; }

 private:
  Elem n_;
  std::vector<std::vector<IntPoly>> R_;
  std::vector<std::vector<IntPoly>> P_;
};

// Σ_z (-1)^{ℓ(y)+ℓ(z)} P_{y,z} P_{w0 w, w0 z}, which is δ_{y,w} when P is the KL matrix.
template <class PFn>
IntPoly inversion_entry(const CoxeterSystem& W, Elem y, Elem w, PFn P) {
  const Elem w0 = W.longest_element(W.full());
  IntPoly sum;
  for (Elem z = 0; z < static_cast<Elem>(W.order()); ++z) {
    IntPoly term = P(y, z) * P(W.multiply(w0, w), W.multiply(w0, z));
    sum += (W.length(y) + W.length(z)) % 2 ? -term : term;
  }
  return sum;
}

}  // namespace oracle
