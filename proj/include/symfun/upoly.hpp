#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symfun/rational.hpp"

namespace symfun {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the top coefficient is never zero.
class UPoly {
 public:
  UPoly() = default;
  UPoly(Rational c);  // NOLINT(google-explicit-constructor)
  explicit UPoly(std::vector<Rational> coeffs);

  static UPoly x_power(int e, Rational c = 1);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(int i) const;
  const Rational& leading() const { return c_.back(); }

  Rational evaluate(const Rational& x) const;
  UPoly monic() const;

  UPoly& operator+=(const UPoly& o);
  UPoly& operator-=(const UPoly& o);
  UPoly& operator*=(const Rational& s);
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator-(UPoly a) { return a *= Rational(-1); }
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& s) { return a *= s; }
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  std::string to_string(char var = 't') const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of Euclidean division; divisor must be nonzero.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0,0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Inverse of a modulo m; throws ZeroDenominator if gcd(a,m) != 1.
UPoly inverse_mod(const UPoly& a, const UPoly& m);

}  // namespace symfun
