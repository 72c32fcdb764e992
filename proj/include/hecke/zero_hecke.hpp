#pragma once

// The algebra ZB spanned by triples (I, c_d, J), d in D+_{IJ}, with
// (I,c_x,J)*(K,c_y,L) = [J=K] (I, c_{x*y}, L).

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/poly.hpp"

namespace hecke {

struct ZBTriple {
  Subset I = 0;
  Elem d = 0;
  Subset J = 0;
  auto key() const { return std::tie(I, d, J); }
  friend bool operator<(const ZBTriple& a, const ZBTriple& b) { return a.key() < b.key(); }
  friend bool operator==(const ZBTriple& a, const ZBTriple& b) { return a.key() == b.key(); }
};

class ZBElement {
 public:
  ZBElement() = default;
  explicit ZBElement(SystemPtr sys) : sys_(std::move(sys)) {}
  /// Throws NotDistinguished unless d is the longest element of its double coset.
  static ZBElement basis(const SystemPtr& sys, Subset I, Elem d, Subset J, const Integer& c = 1);

  const SystemPtr& system() const { return sys_; }
  const std::map<ZBTriple, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const ZBTriple& t, const Integer& c);

  ZBElement& operator+=(const ZBElement& o);
  ZBElement& operator-=(const ZBElement& o);
  friend ZBElement operator+(ZBElement a, const ZBElement& b) { return a += b; }
  friend ZBElement operator-(ZBElement a, const ZBElement& b) { return a -= b; }
  friend bool operator==(const ZBElement& a, const ZBElement& b) { return a.terms_ == b.terms_; }
  std::string str() const;

 private:
  SystemPtr sys_;
  std::map<ZBTriple, Integer> terms_;
};

ZBElement zb_multiply(const ZBElement& a, const ZBElement& b);
/// f_I = (I, c_{w_I}, I)
ZBElement zb_idempotent(const SystemPtr& sys, Subset I);
/// 1 = sum of f_I over all I.
ZBElement zb_identity(const SystemPtr& sys);
/// u_{I,J} = (I, c_{w_J}, J) and d_{J,I} = (J, c_{w_J}, I) for I ⊆ J.
ZBElement zb_u(const SystemPtr& sys, Subset I, Subset J);
ZBElement zb_d(const SystemPtr& sys, Subset J, Subset I);

struct FactorStep {
  enum class Kind { Up, Down, Idempotent };
  Kind kind = Kind::Idempotent;
  /// Up: u_{lower,upper}, the triple (lower, w_upper, upper).
  /// Down: d_{upper,lower}, the triple (upper, w_upper, lower).
  /// Idempotent: f_lower with lower == upper.
  Subset lower = 0;
  Subset upper = 0;
  std::string label() const;
  ZBTriple triple(const CoxeterSystem& sys) const;
};

struct Factorization {
  Subset I = 0;
  Subset J = 0;
  Elem longest = 0;
  /// Read left to right as a product in ZB; covering steps only.
  std::vector<FactorStep> steps;
  /// (J~_i, J_{i+1}) pairs visited, for reporting.
  std::vector<std::pair<Subset, Subset>> trail;
};

/// Writes (I, c_{p+}, J) as a product of covering generators; p is given by any member.
Factorization factorize_double_coset(const SystemPtr& sys, Subset I, Elem member, Subset J);

/// Product of the steps in ZB.
ZBElement multiply_out(const SystemPtr& sys, const Factorization& f);

}  // namespace hecke
