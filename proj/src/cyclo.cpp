#include "symfun/cyclo.hpp"

#include <map>
#include <mutex>

#include "symfun/errors.hpp"

namespace symfun {

int euler_phi(int k) {
  if (k < 1) throw Error("euler_phi: k must be positive");
  int result = k, m = k;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

const UPoly& cyclotomic_polynomial(int k) {
  if (k < 1) throw Error("cyclotomic_polynomial: k must be positive");
  static std::mutex mu;
  static std::map<int, UPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(k); it != cache.end()) return it->second;
  }
  // Phi_k = (t^k - 1) / prod_{d | k, d < k} Phi_d
  UPoly p = UPoly::x_power(k) - UPoly(Rational(1));
  for (int d = 1; d < k; ++d)
    if (k % d == 0) p = divmod(p, cyclotomic_polynomial(d)).first;
  std::lock_guard lock(mu);
  return cache.try_emplace(k, std::move(p)).first->second;
}

CycloElem::CycloElem(int k) : k_(k), c_(static_cast<size_t>(euler_phi(k))) {}

CycloElem::CycloElem(int k, const Rational& c) : CycloElem(k) { c_[0] = c; }

CycloElem CycloElem::from_upoly(int k, const UPoly& u) {
  CycloElem e(k);
  UPoly r = divmod(u, cyclotomic_polynomial(k)).second;
  for (int i = 0; i <= r.degree(); ++i) e.c_[static_cast<size_t>(i)] = r.coeffs()[static_cast<size_t>(i)];
  return e;
}

bool CycloElem::is_zero() const {
  for (const auto& c : c_)
    if (!symfun::is_zero(c)) return false;
  return true;
}

bool CycloElem::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (!symfun::is_zero(c_[i])) return false;
  return true;
}

void CycloElem::check_same(const CycloElem& o) const {
  if (k_ != o.k_) throw Error("mixing elements of different cyclotomic fields");
}

CycloElem& CycloElem::operator+=(const CycloElem& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator-=(const CycloElem& o) {
  check_same(o);
  for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CycloElem& CycloElem::operator*=(const CycloElem& o) {
  check_same(o);
  return *this = from_upoly(k_, residue() * o.residue());
}

CycloElem CycloElem::inverse() const {
  if (is_zero()) throw ZeroDenominator();
  return from_upoly(k_, inverse_mod(residue(), cyclotomic_polynomial(k_)));
}

std::string CycloElem::to_string() const {
  if (is_rational()) return c_[0].get_str();
  return residue().to_string('t') + " mod Phi_" + std::to_string(k_);
}

int cyclotomic_multiplicity(const Poly& p, int k) {
  if (p.is_zero()) throw ZeroPolynomial();
  UPoly u = p.to_upoly('t');
  const UPoly& phi = cyclotomic_polynomial(k);
  int m = 0;
  for (;;) {
    auto [quo, rem] = divmod(u, phi);
    if (!rem.is_zero()) return m;
    u = std::move(quo);
    ++m;
  }
}

CycloElem specialize_root_of_unity(const RatFunc& f, int k) {
  if (f.is_zero()) return CycloElem(k);
  if (f.has_q()) throw Error("specialize_root_of_unity: function must be univariate in t");
  UPoly num = f.numerator().to_upoly('t');
  UPoly den = f.denominator().to_upoly('t');
  const UPoly& phi = cyclotomic_polynomial(k);
  int mn = cyclotomic_multiplicity(f.numerator(), k);
  int md = cyclotomic_multiplicity(f.denominator(), k);
  if (mn > md) return CycloElem(k);
  if (mn < md) throw PoleAtRootOfUnity(k);
  for (int i = 0; i < mn; ++i) {
    num = divmod(num, phi).first;
    den = divmod(den, phi).first;
  }
  return CycloElem::from_upoly(k, num) * CycloElem::from_upoly(k, den).inverse();
}

}  // namespace symfun
