#include "hecke/endomorphism.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

namespace {

void require_pair(const HomElement& a, const HomElement& b) {
  if (a.source != b.source || a.target != b.target)
    throw Error(ErrorKind::BadInput, "homs " + subset_str(a.source) + "->" + subset_str(a.target) +
                                         " and " + subset_str(b.source) + "->" +
                                         subset_str(b.target) + " live in different spaces");
}

void require_covering(Subset I, Subset J) {
  if (!subset_of(I, J) || subset_size(J) != subset_size(I) + 1)
    throw Error(ErrorKind::NotCovering, subset_str(I) + " is not covered by " + subset_str(J));
}

}  // namespace

HomElement& HomElement::operator+=(const HomElement& o) {
  require_pair(*this, o);
  value += o.value;
  return *this;
}

HomElement& HomElement::operator-=(const HomElement& o) {
  require_pair(*this, o);
  value -= o.value;
  return *this;
}

HomElement& HomElement::operator*=(const IntPoly& c) {
  value *= c;
  return *this;
}

bool operator==(const HomElement& a, const HomElement& b) {
  return a.source == b.source && a.target == b.target && a.value == b.value;
}

std::string HomElement::str() const {
  std::ostringstream os;
  os << subset_str(source) << " -> " << subset_str(target) << ": x_" << subset_str(source)
     << " |-> " << value.str();
  return os.str();
}

HomElement zero_hom(const SystemPtr& sys, Subset source, Subset target) {
  return HomElement{source, target, HeckeElement(sys)};
}

HomElement identity_hom(const SystemPtr& sys, Subset I) { return HomElement{I, I, x_I(sys, I)}; }

HeckeElement left_divide_by_xJ(Subset J, const HeckeElement& a) {
  const SystemPtr& sys = a.system();
  HeckeElement h(sys);
  if (a.is_zero()) return h;
  // w = u d with u in W_J, d in D_J is length-additive, so x_J T_d has
  // coefficient 1 at d and is supported on W_J d.
  for (const auto& [w, c] : a.terms())
    if ((sys->descents_left(w) & J) == 0) h.add_term(w, c);
  if (!(x_I(sys, J) * h == a))
    throw Error(ErrorKind::NotInImage, "element is not in x_" + subset_str(J) + " H_q");
  return h;
}

HomElement compose(const HomElement& g, const HomElement& f) {
  if (f.target != g.source)
    throw Error(ErrorKind::BadInput, "cannot compose: target " + subset_str(f.target) +
                                         " differs from source " + subset_str(g.source));
  HeckeElement h = left_divide_by_xJ(f.target, f.value);
  return HomElement{f.source, g.target, g.value * h};
}

HomBasis hom_basis(const SystemPtr& sys, Subset I, Subset J) {
  HomBasis b;
  b.source = I;
  b.target = J;
  b.reps = sys->double_coset_reps(J, I);
  for (Elem d : b.reps) {
    HeckeElement v(sys);
    for (Elem w : sys->double_coset(J, d, I)) v.add_term(w, 1);
    b.homs.push_back(HomElement{I, J, std::move(v)});
  }
  return b;
}

std::vector<IntPoly> express_in_basis(const HomElement& h) {
  const SystemPtr& sys = h.value.system();
  HomBasis b = hom_basis(sys, h.source, h.target);
  std::vector<IntPoly> coeffs;
  HomElement rebuilt = zero_hom(sys, h.source, h.target);
  for (std::size_t i = 0; i < b.reps.size(); ++i) {
    coeffs.push_back(h.value.coeff(b.reps[i]));
    rebuilt += b.homs[i] * coeffs.back();
  }
  if (!(rebuilt == h))
    throw Error(ErrorKind::NotInSpan, "hom is not a combination of double-coset sums");
  return coeffs;
}

HomElement gen_u(const SystemPtr& sys, Subset I, Subset J) {
  require_covering(I, J);
  return HomElement{J, I, x_I(sys, J)};
}

HomElement gen_dprime(const SystemPtr& sys, Subset J, Subset I) {
  require_covering(I, J);
  return HomElement{I, J, x_I(sys, J)};
}

HomElement theta(KLCache& cache, Subset I, Elem d, Subset J) {
  const SystemPtr& sys = cache.system();
  if (!sys->is_max_double(I, d, J))
    throw Error(ErrorKind::NotDistinguished, sys->word_str(d) + " is not a longest " +
                                                 subset_str(I) + "-" + subset_str(J) +
                                                 " double-coset representative");
  return HomElement{J, I, cache.c_plus(d)};
}

std::vector<std::pair<Elem, IntPoly>> express_in_theta(KLCache& cache, const HomElement& h) {
  const SystemPtr& sys = cache.system();
  const Subset I = h.target;
  const Subset J = h.source;
  std::vector<std::pair<Elem, IntPoly>> out;
  HeckeElement rest = h.value;
  while (!rest.is_zero()) {
    Elem top = rest.terms().begin()->first;
    for (const auto& [w, c] : rest.terms())
      if (sys->length(w) > sys->length(top)) top = w;
    if (!sys->is_max_double(I, top, J))
      throw Error(ErrorKind::NotInSpan, "leading term " + sys->word_str(top) +
                                            " is not a longest double-coset representative");
    IntPoly c = rest.coeff(top);
    rest -= cache.c_plus(top) * c;
    out.emplace_back(top, c);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

RHom::RHom(HomElement n, IntPoly d) : num(std::move(n)), den(std::move(d)) {
  if (!in_P(den)) throw Error(ErrorKind::NotInP, "denominator " + den.str() + " is not in P");
  if (den.constant_term() < 0) {
    den = -den;
    num *= IntPoly(-1);
  }
}

bool RHom::is_integral() const {
  // num/den is integral iff every coefficient of num.value is divisible by den.
  for (const auto& [w, c] : num.value.terms()) {
    try {
      exact_div(c, den);
    } catch (const NotDivisibleError&) {
      return false;
    }
  }
  return true;
}

RHom compose(const RHom& g, const RHom& f) {
  return RHom(compose(g.num, f.num), g.den * f.den);
}

RHom operator+(const RHom& a, const RHom& b) {
  return RHom(a.num * b.den + b.num * a.den, a.den * b.den);
}

RHom operator-(const RHom& a, const RHom& b) {
  return RHom(a.num * b.den - b.num * a.den, a.den * b.den);
}

RHom operator*(const PFraction& c, const RHom& a) {
  return RHom(a.num * c.num(), a.den * c.den());
}

bool operator==(const RHom& a, const RHom& b) {
  if (a.source() != b.source() || a.target() != b.target()) return false;
  return a.num * b.den == b.num * a.den;
}

RHom gen_d(const SystemPtr& sys, Subset J, Subset I) {
  const IntPoly pi_I = poincare_poly(*sys, I);
  const IntPoly pi_J = poincare_poly(*sys, J);
  return RHom(gen_dprime(sys, J, I) * pi_I, pi_J);
}

}  // namespace hecke
