#pragma once

#include <compare>
#include <map>
#include <string>

#include "symfun/rational.hpp"
#include "symfun/upoly.hpp"

namespace symfun {

/// Exponent pair of the monomial q^q t^t.
struct Exponent {
  int q = 0;
  int t = 0;
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

/// Canonical term order: higher total degree first, then higher q-exponent.
/// This is the order terms are rendered in; the first term is the leading one.
struct TermOrder {
  bool operator()(const Exponent& a, const Exponent& b) const {
    int da = a.q + a.t, db = b.q + b.t;
    if (da != db) return da > db;
    return a.q > b.q;
  }
};

/// Sparse polynomial in q and t with rational coefficients. No stored coefficient is zero.
class Poly {
 public:
  using Terms = std::map<Exponent, Rational, TermOrder>;

  Poly() = default;
  Poly(Rational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly monomial(Rational c, int q_exp, int t_exp);
  static Poly t(int e = 1) { return monomial(1, 0, e); }
  static Poly q(int e = 1) { return monomial(1, e, 0); }
  static Poly from_upoly(const UPoly& u, char var = 't');

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool has_q() const;
  bool has_t() const;
  int degree_q() const;
  int degree_t() const;
  const Terms& terms() const { return terms_; }
  Rational coeff(int q_exp, int t_exp) const;
  /// First and last term in the canonical order.
  const Terms::value_type& leading() const { return *terms_.begin(); }
  const Terms::value_type& trailing() const { return *terms_.rbegin(); }

  /// Only valid when the polynomial does not involve the other variable.
  UPoly to_upoly(char var = 't') const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Rational& s);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) { return a *= Rational(-1); }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend bool operator==(const Poly& a, const Poly& b);

  Poly pow(int e) const;
  Rational evaluate(const Rational& q, const Rational& t) const;
  Poly substitute_q(const Rational& value) const;
  Poly substitute_t(const Rational& value) const;
  /// Replaces q by t.
  Poly q_as_t() const;
  /// Replaces t by q.
  Poly t_as_q() const;

  /// Positive rational c such that this/c has coprime integer coefficients.
  Rational content() const;
  /// this/content() with the sign chosen so that the trailing coefficient is positive.
  Poly primitive() const;

  /// Canonical rendering: "(-q*t + 1)", "t", "-1/2*t^2", "0".
  /// Polynomials with two or more terms are parenthesised.
  std::string to_string() const;
  /// Rendering without the surrounding parentheses.
  std::string to_string_bare() const;

 private:
  Terms terms_;
};

/// Exact quotient; throws Error if b does not divide a.
Poly divide_exact(const Poly& a, const Poly& b);
/// Greatest common divisor, normalised by primitive(). gcd(0,0) = 0.
Poly gcd(const Poly& a, const Poly& b);

}  // namespace symfun
