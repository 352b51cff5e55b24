#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "symfun/errors.hpp"
#include "symfun/partition.hpp"
#include "symfun/ratfunc.hpp"
#include "symfun/transition.hpp"

namespace symfun {

inline bool is_negative(const Rational& x) { return sgn(x) < 0; }
inline bool is_negative(const RatFunc& x) {
  return sgn(x.scale()) < 0 && x.is_polynomial() && x.primitive_numerator().terms().size() == 1;
}

/// Finite linear combination of basis elements of one classical basis with
/// coefficients in a field F (Rational or RatFunc). No zero coefficient is stored.
template <class F>
class SymFunc {
 public:
  using Coeffs = std::map<Partition, F>;

  explicit SymFunc(Basis b = Basis::m) : basis_(b) {}
  static SymFunc element(Basis b, const Partition& lambda, F c = F(1)) {
    SymFunc x(b);
    x.add(lambda, c);
    return x;
  }
  /// The constant c (index [] in every basis).
  static SymFunc constant(Basis b, F c) { return element(b, Partition(), std::move(c)); }

  Basis basis() const { return basis_; }
  const Coeffs& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  F coeff(const Partition& lambda) const {
    auto it = c_.find(lambda);
    return it == c_.end() ? F(0) : it->second;
  }

  void add(const Partition& lambda, const F& v) {
    if (symfun::is_zero(v)) return;
    auto [it, inserted] = c_.try_emplace(lambda, v);
    if (!inserted) {
      it->second += v;
      if (symfun::is_zero(it->second)) c_.erase(it);
    }
  }

  /// Degree if homogeneous (0 for the zero function).
  std::optional<int> degree() const {
    if (c_.empty()) return 0;
    int d = c_.begin()->first.size();
    if (c_.rbegin()->first.size() != d) return std::nullopt;
    return d;
  }
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (const auto& [p, v] : c_)
      if (d.empty() || d.back() != p.size()) d.push_back(p.size());
    return d;
  }
  SymFunc homogeneous_part(int d) const {
    SymFunc out(basis_);
    for (const auto& [p, v] : c_)
      if (p.size() == d) out.c_.emplace(p, v);
    return out;
  }

  /// Coefficientwise map; drops zeros.
  template <class G, class Fn>
  SymFunc<G> map(Fn&& fn) const {
    SymFunc<G> out(basis_);
    for (const auto& [p, v] : c_) out.add(p, fn(v));
    return out;
  }

  SymFunc& operator+=(const SymFunc& o) {
    require_same_basis(o);
    for (const auto& [p, v] : o.c_) add(p, v);
    return *this;
  }
  SymFunc& operator-=(const SymFunc& o) {
    require_same_basis(o);
    for (const auto& [p, v] : o.c_) add(p, -v);
    return *this;
  }
  SymFunc& operator*=(const F& s) {
    if (symfun::is_zero(s)) {
      c_.clear();
      return *this;
    }
    for (auto& [p, v] : c_) v *= s;
    return *this;
  }
  friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
  friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
  friend SymFunc operator*(SymFunc a, const F& s) { return a *= s; }
  friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.basis_ == b.basis_ && a.c_ == b.c_; }

  /// "3*m[2,1] - 1*m[3]"; coefficients always printed; "0" when empty.
  std::string to_string() const {
    if (c_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [p, v] : c_) {
      bool neg = is_negative(v);
      F a = neg ? F(-v) : v;
      std::string term = symfun::to_string(a) + "*" + basis_letter(basis_) + p.to_string();
      if (first) out = (neg ? "-" : "") + term;
      else out += (neg ? " - " : " + ") + term;
      first = false;
    }
    return out;
  }
  friend std::ostream& operator<<(std::ostream& os, const SymFunc& x) { return os << x.to_string(); }

 private:
  void require_same_basis(const SymFunc& o) const {
    if (o.basis_ != basis_) throw Error("adding symmetric functions in different bases");
  }
  Basis basis_;
  Coeffs c_;
};

/// Re-expresses x in `target`, degree by degree.
template <class F>
SymFunc<F> to_basis(const SymFunc<F>& x, Basis target) {
  if (x.basis() == target) return x;
  SymFunc<F> out(target);
  for (int d : x.degrees()) {
    const auto& t = transition(x.basis(), target, d);
    std::vector<F> acc(t.index.size(), F(0));
    for (const auto& [p, v] : x.coeffs()) {
      if (p.size() != d) continue;
      const auto& row = t.entries[partition_index(p)];
      for (size_t j = 0; j < row.size(); ++j)
        if (!symfun::is_zero(row[j])) acc[j] += v * row[j];
    }
    for (size_t j = 0; j < acc.size(); ++j) out.add(t.index[j], acc[j]);
  }
  return out;
}

/// Product computed in the power-sum basis (p_lambda p_mu = p_{lambda u mu}), returned in x's basis.
template <class F>
SymFunc<F> multiply(const SymFunc<F>& x, const SymFunc<F>& y) {
  SymFunc<F> a = to_basis(x, Basis::p), b = to_basis(y, Basis::p);
  SymFunc<F> out(Basis::p);
  for (const auto& [pa, va] : a.coeffs())
    for (const auto& [pb, vb] : b.coeffs()) out.add(join(pa, pb), va * vb);
  return to_basis(out, x.basis());
}

/// Hall inner product: <p_lambda, p_mu> = z_lambda delta.
template <class F>
F hall_inner(const SymFunc<F>& x, const SymFunc<F>& y) {
  SymFunc<F> a = to_basis(x, Basis::p), b = to_basis(y, Basis::p);
  F acc(0);
  for (const auto& [p, v] : a.coeffs()) {
    auto it = b.coeffs().find(p);
    if (it != b.coeffs().end()) acc += F(v * it->second) * Rational(zee(p));
  }
  return acc;
}

/// The involution with omega(h_n) = e_n; omega(p_lambda) = eps_lambda p_lambda.
template <class F>
SymFunc<F> omega(const SymFunc<F>& x) {
  SymFunc<F> a = to_basis(x, Basis::p), out(Basis::p);
  for (const auto& [p, v] : a.coeffs()) out.add(p, epsilon(p) == 1 ? v : F(-v));
  return to_basis(out, x.basis());
}

/// Adjoint of multiplication by p_n, via the derivation sum_j h_j d/dh_{n+j}
/// on the complete basis. Result in the h basis.
template <class F>
SymFunc<F> pn_perp(const SymFunc<F>& x, int n) {
  if (n < 1) throw Error("pn_perp: n must be positive");
  SymFunc<F> a = to_basis(x, Basis::h), out(Basis::h);
  for (const auto& [lambda, v] : a.coeffs()) {
    const auto& parts = lambda.parts();
    for (size_t i = 0; i < parts.size(); ++i) {
      if (parts[i] < n || (i > 0 && parts[i] == parts[i - 1])) continue;
      int mult = lambda.multiplicity(parts[i]);
      Partition rest = lambda.without_part(parts[i]);
      Partition term = parts[i] == n ? rest : join(rest, Partition{parts[i] - n});
      out.add(term, F(v * Rational(mult)));
    }
  }
  return out;
}

using Sym = SymFunc<Rational>;

/// Skew element u_{lambda/mu} of the family u (m, h, e, s or f) defined by
/// <u_{lambda/mu}, g> = <u_lambda, u_mu g>, built in the h basis as
/// sum_nu <u_lambda, u_mu m_nu> h_nu. Zero when |lambda| < |mu|.
Sym skew(Basis family, const Partition& lambda, const Partition& mu);

/// <m_{lambda/mu}, p_n> from the domino tabloid sum; throws SizeMismatch unless |lambda| = |mu| + n.
Rational skew_monomial_pn_inner(const Partition& lambda, const Partition& mu, int n);
/// The z-weighted tabloid sum sum_{xi |- |mu|} w_{xi mu} w_{(xi u n) lambda} / z_xi.
Rational skew_monomial_tabloid_sum(const Partition& lambda, const Partition& mu, int n);

/// Parses "3*m[2,1] - 1*m[3]" (and bare "s[2,1]"); all terms must use one basis.
Sym parse_symfunc(const std::string& text);
SymFunc<RatFunc> parse_symfunc_ratfunc(const std::string& text);

}  // namespace symfun
