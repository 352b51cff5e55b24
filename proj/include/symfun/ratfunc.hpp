#pragma once

#include <ostream>
#include <string>

#include "symfun/poly.hpp"

namespace symfun {

/// Reduced rational function scale * num / den in q and t.
///
/// Canonical form: num and den are coprime, have coprime integer coefficients
/// and a positive trailing coefficient (in TermOrder); all remaining rational
/// factors and the sign live in scale. Zero is scale 0, num = den = 1. Two
/// rational functions are equal iff their canonical forms are identical.
class RatFunc {
 public:
  RatFunc() : scale_(0), num_(1), den_(1) {}
  RatFunc(Rational c) : scale_(std::move(c)), num_(1), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}                        // NOLINT(google-explicit-constructor)
  RatFunc(const Poly& p);                                            // NOLINT(google-explicit-constructor)

  /// Canonical reduction of num/den; throws ZeroDenominator if den = 0.
  static RatFunc reduce(const Poly& num, const Poly& den);

  const Rational& scale() const { return scale_; }
  const Poly& primitive_numerator() const { return num_; }
  Poly numerator() const { return num_ * scale_; }
  const Poly& denominator() const { return den_; }

  bool is_zero() const { return symfun::is_zero(scale_); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// Value of a constant function; throws otherwise.
  Rational constant_value() const;
  bool has_q() const { return num_.has_q() || den_.has_q(); }
  bool has_t() const { return num_.has_t() || den_.has_t(); }

  RatFunc& operator+=(const RatFunc& o);
  RatFunc& operator-=(const RatFunc& o);
  RatFunc& operator*=(const RatFunc& o);
  RatFunc& operator/=(const RatFunc& o);
  RatFunc& operator*=(const Rational& s);
  friend RatFunc operator+(RatFunc a, const RatFunc& b) { return a += b; }
  friend RatFunc operator-(RatFunc a, const RatFunc& b) { return a -= b; }
  friend RatFunc operator*(RatFunc a, const RatFunc& b) { return a *= b; }
  friend RatFunc operator/(RatFunc a, const RatFunc& b) { return a /= b; }
  friend RatFunc operator*(RatFunc a, const Rational& s) { return a *= s; }
  friend RatFunc operator-(RatFunc a) { return a *= Rational(-1); }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.scale_ == b.scale_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  RatFunc pow(int e) const;
  /// Exact value; throws ZeroDenominator when the denominator vanishes there.
  Rational evaluate(const Rational& q, const Rational& t) const;
  RatFunc substitute_q(const Rational& value) const;
  RatFunc substitute_t(const Rational& value) const;
  RatFunc q_as_t() const;
  RatFunc t_as_q() const;

  /// "(t + 1)", "2/(-t^2 + 1)", "(-q*t - q + t + 1)/(-q*t + 1)", "1/2*t".
  std::string to_string() const;

 private:
  RatFunc(Rational s, Poly n, Poly d) : scale_(std::move(s)), num_(std::move(n)), den_(std::move(d)) {}
  Rational scale_;
  Poly num_;
  Poly den_;
};

inline bool is_zero(const RatFunc& x) { return x.is_zero(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const RatFunc& x) { return os << x.to_string(); }

/// Parses the rendering grammar back (arithmetic expressions in q, t and rationals).
RatFunc parse_ratfunc(const std::string& text);

}  // namespace symfun
