#include "symfun/poly.hpp"

#include <algorithm>
#include <vector>

#include "symfun/errors.hpp"

namespace symfun {

Poly::Poly(Rational c) {
  if (!symfun::is_zero(c)) terms_.emplace(Exponent{0, 0}, std::move(c));
}

Poly Poly::monomial(Rational c, int q_exp, int t_exp) {
  Poly p;
  if (!symfun::is_zero(c)) p.terms_.emplace(Exponent{q_exp, t_exp}, std::move(c));
  return p;
}

Poly Poly::from_upoly(const UPoly& u, char var) {
  Poly p;
  for (int i = 0; i <= u.degree(); ++i) {
    const Rational& c = u.coeffs()[static_cast<size_t>(i)];
    if (symfun::is_zero(c)) continue;
    p.terms_.emplace(var == 'q' ? Exponent{i, 0} : Exponent{0, i}, c);
  }
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

bool Poly::has_q() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.q > 0; });
}

bool Poly::has_t() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& kv) { return kv.first.t > 0; });
}

int Poly::degree_q() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.q);
  return d;
}

int Poly::degree_t() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.t);
  return d;
}

Rational Poly::coeff(int q_exp, int t_exp) const {
  auto it = terms_.find(Exponent{q_exp, t_exp});
  return it == terms_.end() ? Rational(0) : it->second;
}

UPoly Poly::to_upoly(char var) const {
  int deg = var == 'q' ? degree_q() : degree_t();
  std::vector<Rational> v(static_cast<size_t>(std::max(deg, -1) + 1));
  for (const auto& [e, c] : terms_) {
    if ((var == 'q' ? e.t : e.q) != 0) throw Error("polynomial is not univariate");
    v[static_cast<size_t>(var == 'q' ? e.q : e.t)] = c;
  }
  return UPoly(std::move(v));
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (symfun::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [e, c] : o.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, -c);
    if (!inserted) {
      it->second -= c;
      if (symfun::is_zero(it->second)) terms_.erase(it);
    }
  }
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (symfun::is_zero(s)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      Exponent e{ea.q + eb.q, ea.t + eb.t};
      auto [it, inserted] = out.terms_.try_emplace(e, ca * cb);
      if (!inserted) it->second += ca * cb;
    }
  std::erase_if(out.terms_, [](const auto& kv) { return is_zero(kv.second); });
  return out;
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  for (auto ib = b.terms_.begin(); ib != b.terms_.end(); ++ia, ++ib)
    if (!(ia->first == ib->first) || ia->second != ib->second) return false;
  return true;
}

Poly Poly::pow(int e) const {
  Poly r = Rational(1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

namespace {

Rational rational_pow(const Rational& x, int e) {
  Rational r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

}  // namespace

Rational Poly::evaluate(const Rational& qv, const Rational& tv) const {
  Rational acc = 0;
  for (const auto& [e, c] : terms_) acc += c * rational_pow(qv, e.q) * rational_pow(tv, e.t);
  return acc;
}

Poly Poly::substitute_q(const Rational& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) out += monomial(c * rational_pow(value, e.q), 0, e.t);
  return out;
}

Poly Poly::substitute_t(const Rational& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) out += monomial(c * rational_pow(value, e.t), e.q, 0);
  return out;
}

Poly Poly::q_as_t() const {
  Poly out;
  for (const auto& [e, c] : terms_) out += monomial(c, 0, e.q + e.t);
  return out;
}

Poly Poly::t_as_q() const {
  Poly out;
  for (const auto& [e, c] : terms_) out += monomial(c, e.q + e.t, 0);
  return out;
}

Rational Poly::content() const {
  if (terms_.empty()) return 0;
  Integer num = 0, den = 1;
  for (const auto& [e, c] : terms_) {
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Poly Poly::primitive() const {
  if (terms_.empty()) return *this;
  Rational c = content();
  if (sgn(trailing().second) < 0) c = -c;
  Poly out = *this;
  Rational inv = 1 / c;
  for (auto& [e, v] : out.terms_) v *= inv;
  return out;
}

namespace {

std::string render_exponent(char var, int e) {
  std::string s(1, var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

// Renders one term with its sign folded into the leading separator handled by the caller.
std::string render_monomial(const Exponent& e, const Rational& abs_c) {
  std::string vars;
  if (e.q > 0) vars = render_exponent('q', e.q);
  if (e.t > 0) vars += (vars.empty() ? "" : "*") + render_exponent('t', e.t);
  if (vars.empty()) return abs_c.get_str();
  if (abs_c == 1) return vars;
  return abs_c.get_str() + "*" + vars;
}

}  // namespace

std::string Poly::to_string_bare() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      out = (sgn(c) < 0 ? "-" : "") + render_monomial(e, a);
      first = false;
    } else {
      out += (sgn(c) < 0 ? " - " : " + ") + render_monomial(e, a);
    }
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.size() >= 2) return "(" + to_string_bare() + ")";
  return to_string_bare();
}

Poly divide_exact(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw ZeroDenominator();
  Poly rem = a, quo;
  const auto& [lb, lc] = b.leading();
  while (!rem.is_zero()) {
    const auto& [lr, rc] = rem.leading();
    if (lr.q < lb.q || lr.t < lb.t) throw Error("inexact polynomial division");
    Poly term = Poly::monomial(rc / lc, lr.q - lb.q, lr.t - lb.t);
    quo += term;
    rem -= term * b;
  }
  return quo;
}

namespace {

// Recursive view: polynomial in t with coefficients in Q[q]; index = t-exponent.
using Recursive = std::vector<UPoly>;

Recursive to_recursive(const Poly& p) {
  Recursive r(static_cast<size_t>(std::max(p.degree_t(), 0)) + 1);
  std::vector<std::vector<Rational>> dense(r.size());
  for (const auto& [e, c] : p.terms()) {
    auto& row = dense[static_cast<size_t>(e.t)];
    if (row.size() <= static_cast<size_t>(e.q)) row.resize(static_cast<size_t>(e.q) + 1);
    row[static_cast<size_t>(e.q)] = c;
  }
  for (size_t i = 0; i < r.size(); ++i) r[i] = UPoly(std::move(dense[i]));
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
  return r;
}

Poly from_recursive(const Recursive& r) {
  Poly p;
  for (size_t i = 0; i < r.size(); ++i)
    for (int j = 0; j <= r[i].degree(); ++j)
      p += Poly::monomial(r[i].coeffs()[static_cast<size_t>(j)], j, static_cast<int>(i));
  return p;
}

bool rec_zero(const Recursive& r) { return r.size() == 1 && r[0].is_zero(); }
int rec_degree(const Recursive& r) { return rec_zero(r) ? -1 : static_cast<int>(r.size()) - 1; }

void rec_trim(Recursive& r) {
  while (r.size() > 1 && r.back().is_zero()) r.pop_back();
}

UPoly rec_content(const Recursive& r) {
  UPoly g;
  for (const auto& c : r) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.degree() == 0) break;
  }
  return g;
}

// Divides out the Q[q]-content and clears rational denominators.
Recursive rec_primitive(const Recursive& r) {
  if (rec_zero(r)) return r;
  UPoly g = rec_content(r);
  Recursive out(r.size());
  for (size_t i = 0; i < r.size(); ++i) out[i] = divmod(r[i], g).first;
  return to_recursive(from_recursive(out).primitive());
}

Recursive rec_pseudo_remainder(Recursive a, const Recursive& b) {
  const int db = rec_degree(b);
  const UPoly& lb = b.back();
  while (!rec_zero(a) && rec_degree(a) >= db) {
    int shift = rec_degree(a) - db;
    UPoly la = a.back();
    for (auto& c : a) c = c * lb;
    for (int i = 0; i <= db; ++i) a[static_cast<size_t>(i + shift)] -= la * b[static_cast<size_t>(i)];
    rec_trim(a);
  }
  return a;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.primitive();
  if (b.is_zero()) return a.primitive();
  if (a.is_constant() || b.is_constant()) return Poly(1);
  if (!a.has_q() && !b.has_q()) return Poly::from_upoly(gcd(a.to_upoly('t'), b.to_upoly('t')), 't').primitive();
  if (!a.has_t() && !b.has_t()) return Poly::from_upoly(gcd(a.to_upoly('q'), b.to_upoly('q')), 'q').primitive();

  Recursive ra = to_recursive(a), rb = to_recursive(b);
  UPoly content = gcd(rec_content(ra), rec_content(rb));
  ra = rec_primitive(ra);
  rb = rec_primitive(rb);
  if (rec_degree(ra) < rec_degree(rb)) std::swap(ra, rb);
  while (!rec_zero(rb)) {
    Recursive r = rec_pseudo_remainder(ra, rb);
    ra = std::move(rb);
    rb = rec_primitive(r);
  }
  ra = rec_primitive(ra);
  for (auto& c : ra) c = c * content;
  return from_recursive(ra).primitive();
}

}  // namespace symfun
