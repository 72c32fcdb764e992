#include "hecke/poly.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace hecke {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::BadMatrix: return "BadMatrix";
    case ErrorKind::NonFiniteGroup: return "NonFiniteGroup";
    case ErrorKind::SystemMismatch: return "SystemMismatch";
    case ErrorKind::NotDivisible: return "NotDivisible";
    case ErrorKind::NotInP: return "NotInP";
    case ErrorKind::NotDistinguished: return "NotDistinguished";
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::NoExpansion: return "NoExpansion";
    case ErrorKind::NotInImage: return "NotInImage";
    case ErrorKind::NotInSpan: return "NotInSpan";
    case ErrorKind::NotCovering: return "NotCovering";
    case ErrorKind::NonTermination: return "NonTermination";
    case ErrorKind::UnsupportedTorsion: return "UnsupportedTorsion";
    case ErrorKind::StuckPath: return "StuckPath";
    case ErrorKind::BadPath: return "BadPath";
    case ErrorKind::BadInput: return "BadInput";
    case ErrorKind::CacheMismatch: return "CacheMismatch";
  }
  return "Unknown";
}

IntPoly::IntPoly(long c) {
  if (c != 0) coeffs_.emplace_back(c);
}

IntPoly::IntPoly(const Integer& c) {
  if (c != 0) coeffs_.push_back(c);
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::q_power(unsigned k, const Integer& c) {
  if (c == 0) return {};
  std::vector<Integer> v(k + 1, Integer(0));
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Integer IntPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[k];
}

Integer IntPoly::leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }

int IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return static_cast<int>(i);
  return -1;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Integer(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> out(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) { return *this = *this * o; }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly IntPoly::shifted(unsigned k) const {
  if (is_zero()) return {};
  std::vector<Integer> v(k, Integer(0));
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(v));
}

Integer IntPoly::eval(const Integer& x) const {
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer c = content();
  if (leading() < 0) c = -c;
  return div_exact_scalar(c);
}

IntPoly IntPoly::div_exact_scalar(const Integer& c) const {
  if (c == 0) throw NotDivisibleError("division by zero scalar", *this);
  std::vector<Integer> v = coeffs_;
  for (auto& x : v) {
    if (!mpz_divisible_p(x.get_mpz_t(), c.get_mpz_t()))
      throw NotDivisibleError("scalar division is not exact: " + str() + " / " + c.get_str(), *this);
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  }
  return IntPoly(std::move(v));
}

bool operator<(const IntPoly& a, const IntPoly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) return a.coeffs_.size() < b.coeffs_.size();
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i];
  }
  return false;
}

std::string IntPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const Integer& c = coeffs_[i];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << mag.get_str();
    if (i >= 1) {
      if (mag != 1) os << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) { return os << p.str(); }

DivResult div_rem(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw NotDivisibleError("division by the zero polynomial", a);
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer lb = b.leading();
  if (a.degree() < db) return {IntPoly(), a};
  std::vector<Integer> quo(a.degree() - db + 1, Integer(0));
  for (int k = a.degree(); k >= db; --k) {
    Integer& top = rem[k];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) {
      throw NotDivisibleError("quotient leaves Z[q]: " + a.str() + " / " + b.str(),
                              IntPoly(rem));
    }
    Integer f;
    mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    quo[k - db] = f;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {IntPoly(std::move(quo)), IntPoly(std::move(rem))};
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
  DivResult r = div_rem(a, b);
  if (!r.remainder.is_zero()) {
    throw NotDivisibleError(b.str() + " does not divide " + a.str() + " (remainder " +
                                r.remainder.str() + ")",
                            r.remainder);
  }
  return r.quotient;
}

Integer specialize_q0(const IntPoly& p) { return p.constant_term(); }

Integer eval_at_integer(const IntPoly& p, const Integer& x) { return p.eval(x); }

bool in_P(const IntPoly& f) {
  Integer c = f.constant_term();
  return c == 1 || c == -1;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a mod b, all in Z[q].
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  const int da = a.degree();
  const int db = b.degree();
  std::vector<Integer> rem = a.coeffs();
  const Integer lb = b.leading();
  int steps = da - db + 1;
  for (int k = da; k >= db; --k) {
    Integer top = rem[k];
    for (auto& c : rem) c *= lb;
    --steps;
    for (int j = 0; j <= db; ++j) rem[k - db + j] -= top * b.coeffs()[j];
  }
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
  for (auto& c : rem) c *= scale;
  return IntPoly(std::move(rem));
}

Integer int_gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

Integer int_pow(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.primitive_part() * IntPoly(b.content());
  if (b.is_zero()) return a.primitive_part() * IntPoly(a.content());
  Integer c = int_gcd(a.content(), b.content());
  IntPoly A = a.primitive_part();
  IntPoly B = b.primitive_part();
  if (A.degree() < B.degree()) std::swap(A, B);
  // Subresultant PRS.
  Integer g = 1;
  Integer h = 1;
  while (true) {
    if (B.degree() == 0) return IntPoly(c);
    const int delta = A.degree() - B.degree();
    IntPoly R = pseudo_remainder(A, B);
    if (R.is_zero()) break;
    A = B;
    Integer divisor = g * int_pow(h, static_cast<unsigned long>(delta));
    B = R.div_exact_scalar(divisor);
    g = A.leading();
    if (delta == 0) {
      // h unchanged
    } else {
      Integer num = int_pow(g, static_cast<unsigned long>(delta));
      Integer den = int_pow(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
  }
  return B.primitive_part() * IntPoly(c);
}

PFraction::PFraction(const IntPoly& n) : num_(n), den_(1) {}

PFraction::PFraction(const IntPoly& n, const IntPoly& d) : num_(n), den_(d) {
  if (!in_P(den_)) throw Error(ErrorKind::NotInP, "denominator not in P: " + den_.str());
  normalize();
}

void PFraction::normalize() {
  if (num_.is_zero()) {
    den_ = IntPoly(1);
    return;
  }
  IntPoly g = gcd(num_, den_);
  if (g.degree() > 0 || g.constant_term() != 1) {
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
  }
  if (den_.constant_term() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

bool PFraction::is_integral() const { return den_ == IntPoly(1); }

PFraction PFraction::inverse() const {
  if (!in_P(num_)) throw Error(ErrorKind::NotInP, "not a unit of R: " + str());
  return PFraction(den_, num_);
}

PFraction& PFraction::operator+=(const PFraction& o) {
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

PFraction& PFraction::operator-=(const PFraction& o) { return *this += -o; }

PFraction& PFraction::operator*=(const PFraction& o) {
  num_ *= o.num_;
  den_ *= o.den_;
  normalize();
  return *this;
}

PFraction PFraction::operator-() const {
  PFraction r = *this;
  r.num_ = -r.num_;
  return r;
}

bool operator==(const PFraction& a, const PFraction& b) {
  return a.num_ * b.den_ == b.num_ * a.den_;
}

std::string PFraction::str() const {
  if (is_integral()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

std::ostream& operator<<(std::ostream& os, const PFraction& p) { return os << p.str(); }

}  // namespace hecke
