#include "symfun/upoly.hpp"

#include <algorithm>

#include "symfun/errors.hpp"
#include "symfun/poly.hpp"

namespace symfun {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw ParseError("bad rational: '" + text + "'");
  r.canonicalize();
  return r;
}

UPoly::UPoly(Rational c) {
  if (!symfun::is_zero(c)) c_.push_back(std::move(c));
}

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly UPoly::x_power(int e, Rational c) {
  std::vector<Rational> v(static_cast<size_t>(e) + 1);
  v.back() = std::move(c);
  return UPoly(std::move(v));
}

void UPoly::trim() {
  while (!c_.empty() && symfun::is_zero(c_.back())) c_.pop_back();
}

Rational UPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<size_t>(i)];
}

Rational UPoly::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  UPoly r = *this;
  Rational inv = 1 / leading();
  for (auto& c : r.c_) c *= inv;
  return r;
}

UPoly& UPoly::operator+=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator-=(const UPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UPoly& UPoly::operator*=(const Rational& s) {
  if (symfun::is_zero(s)) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (is_zero(a.c_[i])) continue;
    for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(out));
}

std::string UPoly::to_string(char var) const {
  Poly p;
  for (int i = 0; i <= degree(); ++i)
    p += var == 'q' ? Poly::monomial(c_[static_cast<size_t>(i)], i, 0)
                    : Poly::monomial(c_[static_cast<size_t>(i)], 0, i);
  return p.to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
  const auto& bc = b.coeffs();
  Rational inv = 1 / b.leading();
  for (int i = a.degree(); i >= b.degree(); --i) {
    Rational f = rem[static_cast<size_t>(i)] * inv;
    if (is_zero(f)) continue;
    quo[static_cast<size_t>(i - b.degree())] = f;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<size_t>(i - b.degree() + j)] -= f * bc[static_cast<size_t>(j)];
  }
  return {UPoly(std::move(quo)), UPoly(std::move(rem))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a, y = b;
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  // extended Euclid tracking the coefficient of a
  UPoly r0 = m, r1 = divmod(a, m).second;
  UPoly s0, s1 = Rational(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    UPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw ZeroDenominator();
  return divmod(s0 * (1 / r0.leading()), m).second;
}

}  // namespace symfun
