#include "hecke/zero_hecke.hpp"

#include <algorithm>
#include <sstream>

namespace hecke {

ZBElement ZBElement::basis(const SystemPtr& sys, Subset I, Elem d, Subset J, const Integer& c) {
  ZBElement z(sys);
  z.add_term(ZBTriple{I, d, J}, c);
  return z;
}

void ZBElement::add_term(const ZBTriple& t, const Integer& c) {
  if (!sys_->is_max_double(t.I, t.d, t.J))
    throw Error(ErrorKind::NotDistinguished,
                "(" + subset_str(t.I) + ", c_" + sys_->word_str(t.d) + ", " + subset_str(t.J) +
                    ") is not an admissible triple");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(t, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

ZBElement& ZBElement::operator+=(const ZBElement& o) {
  if (!sys_) sys_ = o.sys_;
  for (const auto& [t, c] : o.terms_) add_term(t, c);
  return *this;
}

ZBElement& ZBElement::operator-=(const ZBElement& o) {
  if (!sys_) sys_ = o.sys_;
  for (const auto& [t, c] : o.terms_) add_term(t, -c);
  return *this;
}

std::string ZBElement::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [t, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << c.get_str() << "*";
    os << "(" << subset_str(t.I) << ", c_" << sys_->word_str(t.d) << ", " << subset_str(t.J)
       << ")";
  }
  return os.str();
}

ZBElement zb_multiply(const ZBElement& a, const ZBElement& b) {
  const SystemPtr& sys = a.system() ? a.system() : b.system();
  ZBElement out(sys);
  if (a.is_zero() || b.is_zero()) return out;
  sys->check_same(*b.system());
  for (const auto& [x, cx] : a.terms())
    for (const auto& [y, cy] : b.terms())
      if (x.J == y.I) out.add_term(ZBTriple{x.I, sys->demazure(x.d, y.d), y.J}, cx * cy);
  return out;
}

ZBElement zb_idempotent(const SystemPtr& sys, Subset I) {
  return ZBElement::basis(sys, I, sys->longest_element(I), I);
}

ZBElement zb_identity(const SystemPtr& sys) {
  ZBElement z(sys);
  for (Subset I : sys->lambda()) z += zb_idempotent(sys, I);
  return z;
}

ZBElement zb_u(const SystemPtr& sys, Subset I, Subset J) {
  if (!subset_of(I, J)) throw Error(ErrorKind::NotCovering, "u needs I ⊆ J");
  return ZBElement::basis(sys, I, sys->longest_element(J), J);
}

ZBElement zb_d(const SystemPtr& sys, Subset J, Subset I) {
  if (!subset_of(I, J)) throw Error(ErrorKind::NotCovering, "d needs I ⊆ J");
  return ZBElement::basis(sys, J, sys->longest_element(J), I);
}

std::string FactorStep::label() const {
  switch (kind) {
    case Kind::Up:
      return "u" + subset_str(lower) + subset_str(upper);
    case Kind::Down:
      return "d" + subset_str(upper) + subset_str(lower);
    case Kind::Idempotent:
      break;
  }
  return "f" + subset_str(lower);
}

ZBTriple FactorStep::triple(const CoxeterSystem& sys) const {
  Elem top = sys.longest_element(upper);
  switch (kind) {
    case Kind::Up:
      return ZBTriple{lower, top, upper};
    case Kind::Down:
      return ZBTriple{upper, top, lower};
    case Kind::Idempotent:
      break;
  }
  return ZBTriple{lower, top, lower};
}

namespace {

// Covering chain from `lower` up to `upper`, adding elements in increasing order.
std::vector<Subset> chain_between(Subset lower, Subset upper) {
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

}  // namespace

Factorization factorize_double_coset(const SystemPtr& sys, Subset I, Elem member, Subset J) {
  Factorization f;
  f.I = I;
  f.J = J;
  Elem x = sys->double_coset_max(I, member, J);
  f.longest = x;
  // Built right to left, then reversed.
  std::vector<FactorStep> rev;
  const std::size_t limit = 2 * static_cast<std::size_t>(sys->rank()) * sys->order() + 2;
  for (std::size_t step = 0;; ++step) {
    if (step > limit)
      throw Error(ErrorKind::NonTermination, "factorization exceeded its step bound");
    const Subset Jt = sys->descents_right(x);
    if (Jt != J) {
      // d_{J~,J} as covering steps; rightmost factor first.
      auto ch = chain_between(J, Jt);
      for (std::size_t k = 0; k + 1 < ch.size(); ++k)
        rev.push_back(FactorStep{FactorStep::Kind::Down, ch[k], ch[k + 1]});
    }
    const Elem d = sys->double_coset_min(I, x, Jt);
    const Subset J1 = sys->intersect_parabolic(I, d, Jt);
    f.trail.emplace_back(Jt, J1);
    if (J1 == Jt) {
      if (Jt != I || d != sys->identity())
        throw Error(ErrorKind::NonTermination, "factorization stopped away from f_I");
      rev.push_back(FactorStep{FactorStep::Kind::Idempotent, I, I});
      break;
    }
    // u_{J1,J~}: the chain read left to right is J1 ⊏ ... ⊏ J~.
    auto ch = chain_between(J1, Jt);
    for (std::size_t k = ch.size() - 1; k > 0; --k)
      rev.push_back(FactorStep{FactorStep::Kind::Up, ch[k - 1], ch[k]});
    x = sys->double_coset_max(I, d, J1);
    J = J1;
  }
  f.steps.assign(rev.rbegin(), rev.rend());
  return f;
}

ZBElement multiply_out(const SystemPtr& sys, const Factorization& f) {
  ZBElement acc;
  bool first = true;
  for (const auto& st : f.steps) {
    ZBTriple t = st.triple(*sys);
    ZBElement g = ZBElement::basis(sys, t.I, t.d, t.J);
    acc = first ? g : zb_multiply(acc, g);
    first = false;
  }
  return first ? ZBElement(sys) : acc;
}

}  // namespace hecke
