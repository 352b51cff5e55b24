#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "symfun/ratfunc.hpp"

namespace symfun {

int euler_phi(int k);
/// The k-th cyclotomic polynomial Phi_k(t), k >= 1.
const UPoly& cyclotomic_polynomial(int k);

/// Element of Q[t]/Phi_k(t), i.e. of Q(xi_k) for a primitive k-th root of unity xi_k.
/// coeffs() has length euler_phi(k); for k = 1, 2 the single entry is the rational value
/// at t = 1 resp. t = -1.
class CycloElem {
 public:
  explicit CycloElem(int k);
  CycloElem(int k, const Rational& c);
  /// Residue of u modulo Phi_k.
  static CycloElem from_upoly(int k, const UPoly& u);

  int k() const { return k_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  UPoly residue() const { return UPoly(c_); }
  bool is_zero() const;
  bool is_rational() const;

  CycloElem& operator+=(const CycloElem& o);
  CycloElem& operator-=(const CycloElem& o);
  CycloElem& operator*=(const CycloElem& o);
  friend CycloElem operator+(CycloElem a, const CycloElem& b) { return a += b; }
  friend CycloElem operator-(CycloElem a, const CycloElem& b) { return a -= b; }
  friend CycloElem operator*(CycloElem a, const CycloElem& b) { return a *= b; }
  friend bool operator==(const CycloElem& a, const CycloElem& b) { return a.k_ == b.k_ && a.c_ == b.c_; }
  /// Throws ZeroDenominator for zero.
  CycloElem inverse() const;

  /// Rationals render plainly; otherwise "(t + 1) mod Phi_3".
  std::string to_string() const;

 private:
  void check_same(const CycloElem& o) const;
  int k_;
  std::vector<Rational> c_;
};

inline bool is_zero(const CycloElem& x) { return x.is_zero(); }
inline std::string to_string(const CycloElem& x) { return x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CycloElem& x) { return os << x.to_string(); }

/// Exponent of Phi_k in p (univariate in t). Throws ZeroPolynomial for p = 0.
int cyclotomic_multiplicity(const Poly& p, int k);

/// Exact value of f (univariate in t) at t = xi_k. Zero if Phi_k divides the numerator
/// more often than the denominator; throws PoleAtRootOfUnity if less often.
CycloElem specialize_root_of_unity(const RatFunc& f, int k);

}  // namespace symfun
