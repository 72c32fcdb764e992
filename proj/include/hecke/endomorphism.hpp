#pragma once

// Homomorphisms between the right ideals x_I H_q, stored by the image of x_I.

#include <string>
#include <vector>

#include "hecke/hecke_algebra.hpp"
#include "hecke/kl_cache.hpp"

namespace hecke {

/// phi: x_source H_q -> x_target H_q with phi(x_source) = value.
struct HomElement {
  Subset source = 0;
  Subset target = 0;
  HeckeElement value;

  bool is_zero() const { return value.is_zero(); }
  HomElement& operator+=(const HomElement& o);
  HomElement& operator-=(const HomElement& o);
  HomElement& operator*=(const IntPoly& c);
  friend HomElement operator+(HomElement a, const HomElement& b) { return a += b; }
  friend HomElement operator-(HomElement a, const HomElement& b) { return a -= b; }
  friend HomElement operator*(HomElement a, const IntPoly& c) { return a *= c; }
  friend HomElement operator*(const IntPoly& c, HomElement a) { return a *= c; }
  friend bool operator==(const HomElement& a, const HomElement& b);
  std::string str() const;
};

HomElement zero_hom(const SystemPtr& sys, Subset source, Subset target);
/// 1_I
HomElement identity_hom(const SystemPtr& sys, Subset I);

/// h with x_J h = a, read off at T_d for d in D_J. NotInImage if a is not in x_J H_q.
HeckeElement left_divide_by_xJ(Subset J, const HeckeElement& a);

/// g after f.
HomElement compose(const HomElement& g, const HomElement& f);

/// Double-coset sums: for d in D_{JI}, the hom I -> J with value sum over W_J d W_I.
struct HomBasis {
  Subset source = 0;
  Subset target = 0;
  std::vector<Elem> reps;
  std::vector<HomElement> homs;
};
HomBasis hom_basis(const SystemPtr& sys, Subset I, Subset J);

/// Coefficients against hom_basis(h.source, h.target). NotInSpan on failure.
std::vector<IntPoly> express_in_basis(const HomElement& h);

/// Inclusion x_J H -> x_I H for I ⊏ J; value x_J.
HomElement gen_u(const SystemPtr& sys, Subset I, Subset J);
/// x_I h -> x_J h for I ⊏ J; value x_J.
HomElement gen_dprime(const SystemPtr& sys, Subset J, Subset I);

/// Theta^d_{I,J}: x_J H -> x_I H with value C+_d, d in D+_{IJ}.
HomElement theta(KLCache& cache, Subset I, Elem d, Subset J);
/// Coefficients of h (source J, target I) in the Theta basis, keyed by d in D+_{IJ}.
std::vector<std::pair<Elem, IntPoly>> express_in_theta(KLCache& cache, const HomElement& h);

/// Element of R ⊗ E_q: numerator / den with den in P.
struct RHom {
  HomElement num;
  IntPoly den = 1;

  RHom() = default;
  RHom(HomElement n, IntPoly d = 1);
  Subset source() const { return num.source; }
  Subset target() const { return num.target; }
  bool is_integral() const;
};

RHom compose(const RHom& g, const RHom& f);
RHom operator+(const RHom& a, const RHom& b);
RHom operator-(const RHom& a, const RHom& b);
RHom operator*(const PFraction& c, const RHom& a);
bool operator==(const RHom& a, const RHom& b);

/// d_{J,I} = (pi(I)/pi(J)) d'_{J,I}; the projection onto x_I R H.
RHom gen_d(const SystemPtr& sys, Subset J, Subset I);

}  // namespace hecke
