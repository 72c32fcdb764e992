#pragma once

// The generic Iwahori-Hecke algebra H_q over Z[q] in the T-basis.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/poly.hpp"

namespace hecke {

class HeckeElement {
 public:
  using Terms = std::map<Elem, IntPoly>;

  HeckeElement() = default;
  explicit HeckeElement(SystemPtr sys) : sys_(std::move(sys)) {}

  static HeckeElement zero(const SystemPtr& sys) { return HeckeElement(sys); }
  static HeckeElement one(const SystemPtr& sys) { return basis(sys, 0); }
  static HeckeElement basis(const SystemPtr& sys, Elem w, const IntPoly& c = 1);

  const SystemPtr& system() const { return sys_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  IntPoly coeff(Elem w) const;
  /// Adds c*T_w, dropping the entry if it cancels.
  void add_term(Elem w, const IntPoly& c);

  /// this * T_s
  HeckeElement right_mul_gen(int s) const;
  /// T_s * this
  HeckeElement left_mul_gen(int s) const;

  HeckeElement& operator+=(const HeckeElement& o);
  HeckeElement& operator-=(const HeckeElement& o);
  HeckeElement& operator*=(const IntPoly& c);
  HeckeElement operator-() const;

  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) { return a += b; }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) { return a -= b; }
  friend HeckeElement operator*(HeckeElement a, const IntPoly& c) { return a *= c; }
  friend HeckeElement operator*(const IntPoly& c, HeckeElement a) { return a *= c; }
  friend HeckeElement operator*(const HeckeElement& a, const HeckeElement& b);
  friend bool operator==(const HeckeElement& a, const HeckeElement& b);

  /// "T_e + (q - 1)*T_12"; 1-based generator digits.
  std::string str() const;

 private:
  void require(const HeckeElement& o) const;

  SystemPtr sys_;
  Terms terms_;
};

HeckeElement t_mul(const HeckeElement& a, const HeckeElement& b);

/// T_w -> T_{w^-1}, extended linearly; an anti-automorphism.
HeckeElement iota(const HeckeElement& a);

/// q -> 0 on every coefficient.
HeckeElement specialize_0(const HeckeElement& a);

IntPoly poincare_poly(const CoxeterSystem& sys, Subset I);

/// Sum of T_w over W_I.
HeckeElement x_I(const SystemPtr& sys, Subset I);
/// 1 + T_s
HeckeElement x_gen(const SystemPtr& sys, int s);
/// x_{s_1} x_{s_2} ... x_{s_k} for the given letters (any sequence).
HeckeElement x_word(const SystemPtr& sys, const std::vector<int>& letters);

/// Alternating word of length i in {s,t} whose rightmost letter is `last`.
std::vector<int> alternating_word(int s, int t, int i, int last);

/// x^(m)_{(s,t)} = 1 + sum_{i<m} (T_{[i]s} + T_{[i]t}) + T_{[m]t}.
HeckeElement dihedral_x_m(const SystemPtr& sys, int s, int t, int m);

/// binom(j+k-1, j-1) (-q)^k with k = (m-j)/2, zero for odd m-j.
IntPoly b_coeff(int m, int j);

/// x_I = x_word + q * sum a_y x_y for a maximal chain ∅ ⊏ I_1 ⊏ ... ⊏ I.
struct GeneratorExpansion {
  Subset I = 0;
  std::vector<Subset> chain;
  /// Reduced word of w_{I•}; the rightmost letters spell w_{I_1}.
  std::vector<int> word;
  /// (subword y, a_y); the leading word itself is not listed.
  std::vector<std::pair<std::vector<int>, IntPoly>> corrections;
};

/// Validates `chain` (I_1 ⊏ I_2 ⊏ ... ⊏ I_m = I, ∅ omitted) and eliminates
/// x_I - x_word against the subword monomials, longest support first.
GeneratorExpansion kl_generator_expansion(const SystemPtr& sys, const std::vector<Subset>& chain);

/// The chain adding the elements of I in increasing order.
std::vector<Subset> default_chain(Subset I);

/// Full expansion back into H_q; equals x_I.
HeckeElement expand(const SystemPtr& sys, const GeneratorExpansion& e);

/// Hecke monoid product: c_x c_y = c_{x*y}.
Elem c0_mul(const CoxeterSystem& sys, Elem x, Elem y);

}  // namespace hecke
