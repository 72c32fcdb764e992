#pragma once

// Exact scalars: Z[q] with arbitrary-precision coefficients, and the
// localization R = Z[q]_P at polynomials with constant term 1.

#include <gmpxx.h>

#include <initializer_list>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "hecke/error.hpp"

namespace hecke {

using Integer = mpz_class;

/// Polynomial in q over Z, lowest degree first. The zero polynomial has no
/// coefficients; a nonzero polynomial never has a trailing zero.
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(long c);  // NOLINT(google-explicit-constructor)
  IntPoly(const Integer& c);  // NOLINT(google-explicit-constructor)
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Integer> coeffs);

  static IntPoly q_power(unsigned k, const Integer& c = 1);
  static IntPoly q() { return q_power(1); }

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Integer coeff(int k) const;
  Integer leading() const;
  Integer constant_term() const { return coeff(0); }
  const std::vector<Integer>& coeffs() const { return coeffs_; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  int valuation() const;

  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly operator-() const;

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend bool operator==(const IntPoly& a, const IntPoly& b) = default;

  /// Multiply by q^k.
  IntPoly shifted(unsigned k) const;
  Integer eval(const Integer& x) const;
  Integer content() const;
  IntPoly primitive_part() const;
  /// Divide every coefficient by c; throws NotDivisible if inexact.
  IntPoly div_exact_scalar(const Integer& c) const;

  /// Total order (degree, then coefficients from the top); used for
  /// deterministic containers only.
  friend bool operator<(const IntPoly& a, const IntPoly& b);

  std::string str() const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

/// Raised by exact division; carries what was left over.
class NotDivisibleError : public Error {
 public:
  NotDivisibleError(const std::string& what, IntPoly remainder)
      : Error(ErrorKind::NotDivisible, what), remainder_(std::move(remainder)) {}
  const IntPoly& remainder() const { return remainder_; }

 private:
  IntPoly remainder_;
};

struct DivResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division in Q[q] restricted to the case where it stays in Z[q]:
/// requires the divisor's leading coefficient to divide every step.
/// Throws NotDivisible if a non-integral step occurs.
DivResult div_rem(const IntPoly& a, const IntPoly& b);

/// Quotient a/b when b divides a exactly in Z[q]; otherwise NotDivisible
/// (carrying the remainder).
IntPoly exact_div(const IntPoly& a, const IntPoly& b);

/// Constant term (the image under q -> 0).
Integer specialize_q0(const IntPoly& p);
Integer eval_at_integer(const IntPoly& p, const Integer& x);

/// Membership of f in the multiplicative set P (constant term +-1).
bool in_P(const IntPoly& f);

/// gcd in Z[q] via the subresultant PRS, normalized to a positive leading
/// coefficient. gcd(0,0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Element of R = Z[q]_P: numerator / denominator with the denominator in P.
/// Stored reduced with a denominator of constant term +1.
class PFraction {
 public:
  PFraction() : num_(0), den_(1) {}
  PFraction(const IntPoly& n);  // NOLINT(google-explicit-constructor)
  PFraction(long n) : PFraction(IntPoly(n)) {}  // NOLINT(google-explicit-constructor)
  PFraction(const IntPoly& n, const IntPoly& d);

  const IntPoly& num() const { return num_; }
  const IntPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// True when the value lies in Z[q] (denominator 1).
  bool is_integral() const;
  bool is_unit() const { return in_P(num_); }
  PFraction inverse() const;

  PFraction& operator+=(const PFraction& o);
  PFraction& operator-=(const PFraction& o);
  PFraction& operator*=(const PFraction& o);
  PFraction operator-() const;

  friend PFraction operator+(PFraction a, const PFraction& b) { return a += b; }
  friend PFraction operator-(PFraction a, const PFraction& b) { return a -= b; }
  friend PFraction operator*(PFraction a, const PFraction& b) { return a *= b; }
  friend PFraction operator/(const PFraction& a, const PFraction& b) { return a * b.inverse(); }
  friend bool operator==(const PFraction& a, const PFraction& b);

  std::string str() const;

 private:
  void normalize();
  IntPoly num_;
  IntPoly den_;
};

std::ostream& operator<<(std::ostream& os, const PFraction& p);

}  // namespace hecke
