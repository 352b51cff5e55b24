#include "symfun/deformed.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "symfun/errors.hpp"
#include "symfun/linalg.hpp"

namespace symfun {

RatFunc deformed_norm(const Partition& rho, InnerKind kind) {
  Poly num(1), den(1);
  for (int r : rho.parts()) {
    if (kind != InnerKind::q) den *= Poly(1) - Poly::t(r);
    if (kind != InnerKind::t) num *= Poly(1) - Poly::q(r);
  }
  return RatFunc::reduce(num * Rational(zee(rho)), den);
}

RatFunc deformed_inner(const QSym& x, const QSym& y, InnerKind kind) {
  QSym a = to_basis(x, Basis::p), b = to_basis(y, Basis::p);
  RatFunc acc;
  for (const auto& [p, v] : a.coeffs()) {
    auto it = b.coeffs().find(p);
    if (it != b.coeffs().end()) acc += v * it->second * deformed_norm(p, kind);
  }
  return acc;
}

QSym lift(const Sym& x) {
  return x.map<RatFunc>([](const Rational& v) { return RatFunc(v); });
}

Sym lower(const QSym& x) {
  return x.map<Rational>([](const RatFunc& v) { return v.constant_value(); });
}

QSym substitute_t(const QSym& x, const Rational& value) {
  return x.map<RatFunc>([&](const RatFunc& v) { return v.substitute_t(value); });
}

QSym substitute_q(const QSym& x, const Rational& value) {
  return x.map<RatFunc>([&](const RatFunc& v) { return v.substitute_q(value); });
}

QSym q_as_t(const QSym& x) {
  return x.map<RatFunc>([](const RatFunc& v) { return v.q_as_t(); });
}

namespace {

// Gram matrix of the monomial basis of degree n under the form, indexed by partitions_of(n).
std::shared_ptr<const Matrix<RatFunc>> monomial_gram(int n, InnerKind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<const Matrix<RatFunc>>> cache;
  auto key = std::make_pair(n, static_cast<int>(kind));
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  const auto& mp = transition(Basis::m, Basis::p, n);
  const size_t sz = mp.index.size();
  std::vector<RatFunc> norms;
  for (const auto& rho : mp.index) norms.push_back(deformed_norm(rho, kind));
  auto g = std::make_shared<Matrix<RatFunc>>(sz, std::vector<RatFunc>(sz));
  for (size_t i = 0; i < sz; ++i)
    for (size_t j = i; j < sz; ++j) {
      RatFunc acc;
      for (size_t r = 0; r < sz; ++r) {
        Rational c = mp.entries[i][r] * mp.entries[j][r];
        if (!is_zero(c)) acc += norms[r] * c;
      }
      (*g)[i][j] = acc;
      (*g)[j][i] = acc;
    }
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(g)).first->second;
}

// Partitions preceding lambda in the chosen order; these carry the unknowns.
std::vector<Partition> lower_set(const Partition& lambda, OrthoMethod method) {
  auto all = partitions_of(lambda.size());
  std::vector<Partition> out;
  switch (method) {
    case OrthoMethod::dominance_ideal:
      for (const auto& mu : all)
        if (mu != lambda && dominates(lambda, mu)) out.push_back(mu);
      break;
    case OrthoMethod::lex_extension:
      for (const auto& mu : all)
        if (mu > lambda) out.push_back(mu);
      break;
    case OrthoMethod::n_extension:
      for (const auto& mu : all) {
        int a = n_of(mu), b = n_of(lambda);
        if (a > b || (a == b && mu > lambda)) out.push_back(mu);
      }
      break;
  }
  return out;
}

}  // namespace

QSym orthogonal_unitriangular(const Partition& lambda, InnerKind kind, OrthoMethod method) {
  QSym out = QSym::element(Basis::m, lambda);
  auto lower = lower_set(lambda, method);
  if (lower.empty()) return out;
  const auto& g = *monomial_gram(lambda.size(), kind);
  const size_t k = lower.size();
  std::vector<size_t> idx;
  for (const auto& mu : lower) idx.push_back(partition_index(mu));
  const size_t li = partition_index(lambda);
  Matrix<RatFunc> a(k, std::vector<RatFunc>(k));
  Matrix<RatFunc> b(1, std::vector<RatFunc>(k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) a[i][j] = g[idx[i]][idx[j]];
    b[0][i] = -g[li][idx[i]];
  }
  auto x = solve_right(std::move(a), std::move(b));
  for (size_t i = 0; i < k; ++i) out.add(lower[i], x[0][i]);
  return out;
}

Poly phi(int r) {
  Poly out(1);
  for (int j = 1; j <= r; ++j) out *= Poly(1) - Poly::t(j);
  return out;
}

Poly hl_b(const Partition& lambda) {
  Poly out(1);
  const auto& parts = lambda.parts();
  for (size_t i = 0; i < parts.size(); ++i)
    if (i == 0 || parts[i] != parts[i - 1]) out *= phi(lambda.multiplicity(parts[i]));
  return out;
}

namespace {

const QSym& cached_family(const Partition& lambda, InnerKind kind) {
  static std::mutex mu;
  static std::map<std::pair<int, Partition>, std::shared_ptr<const QSym>> cache;
  auto key = std::make_pair(static_cast<int>(kind), lambda);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto value = std::make_shared<const QSym>(orthogonal_unitriangular(lambda, kind));
  std::lock_guard lock(mu);
  return *cache.try_emplace(key, std::move(value)).first->second;
}

QSym product_of_q(const Partition& nu) {
  QSym out = QSym::constant(Basis::m, RatFunc(1));
  for (int part : nu.parts()) out = multiply(out, qn(part));
  return out;
}

void require_size(const Partition& lambda, int n) {
  if (lambda.size() != n) throw SizeMismatch("|lambda| = " + std::to_string(lambda.size()) + " but n = " + std::to_string(n));
}

}  // namespace

const QSym& hl_P(const Partition& lambda) { return cached_family(lambda, InnerKind::t); }

QSym hl_Q(const Partition& lambda) { return hl_P(lambda) * RatFunc(hl_b(lambda)); }

QSym qn(int n) {
  if (n < 0) throw Error("q_n: negative degree");
  return n == 0 ? QSym::constant(Basis::m, RatFunc(1)) : hl_Q(Partition{n});
}

QSym big_schur(const Partition& lambda) {
  QSym out(Basis::m);
  for (const auto& [nu, c] : jacobi_trudi(lambda)) out += product_of_q(nu) * RatFunc(Rational(c));
  return out;
}

const QSym& mac_P(const Partition& lambda) { return cached_family(lambda, InnerKind::qt); }

QSym mac_J(const Partition& lambda) { return mac_P(lambda) * RatFunc(mac_c(lambda)); }

QSym whittaker(const Partition& lambda) { return cached_family(lambda, InnerKind::q); }

Poly mac_c(const Partition& lambda) {
  Poly out(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i - 1); ++j)
      out *= Poly(1) - Poly::monomial(1, arm(lambda, i, j), leg(lambda, i, j) + 1);
  return out;
}

Poly mac_X(const Partition& lambda) {
  Poly out(1);
  for (int i = 1; i <= lambda.length(); ++i)
    for (int j = 1; j <= lambda.part(i - 1); ++j)
      if (i != 1 || j != 1) out *= Poly::t(i - 1) - Poly::q(j - 1);
  return out;
}

RatFunc hl_Q_pn_closed(const Partition& lambda, int n) {
  require_size(lambda, n);
  const int l = lambda.length();
  // t^{n(lambda)} prod_{j<l} (1 - t^{-j}) = t^{n(lambda) - l(l-1)/2} prod_{j<l} (t^j - 1)
  Poly out = Poly::t(n_of(lambda) - l * (l - 1) / 2);
  for (int j = 1; j < l; ++j) out *= Poly::t(j) - Poly(1);
  return RatFunc(out);
}

RatFunc hl_Q_pn_hall_closed(const Partition& lambda, int n) {
  return hl_Q_pn_closed(lambda, n) * RatFunc(Poly(1) - Poly::t(n));
}

RatFunc hl_P_pn_closed(const Partition& lambda, int n) {
  return RatFunc::reduce((Poly(1) - Poly::t(n)) * hl_Q_pn_closed(lambda, n).numerator(), hl_b(lambda));
}

RatFunc big_schur_pn_closed(const Partition& lambda, int n) {
  require_size(lambda, n);
  if (!is_hook(lambda)) return RatFunc();
  Poly v = Poly(1) - Poly::t(n);
  return RatFunc((n - lambda.part(0)) % 2 ? -v : v);
}

RatFunc mac_P_pn_closed(const Partition& lambda, int n) {
  require_size(lambda, n);
  return RatFunc::reduce((Poly(1) - Poly::t(n)) * mac_X(lambda), mac_c(lambda));
}

RatFunc mac_J_pn_closed(const Partition& lambda, int n) {
  require_size(lambda, n);
  return RatFunc((Poly(1) - Poly::t(n)) * mac_X(lambda));
}

RatFunc whittaker_pn_closed(const Partition& lambda, int n) {
  require_size(lambda, n);
  const int l1 = lambda.part(0);
  Poly out = Poly::q(n_of(lambda.conjugate()) - l1 * (l1 - 1) / 2);
  for (int i = 1; i < l1; ++i) out *= Poly(1) - Poly::q(i);
  return RatFunc((n - l1) % 2 ? -out : out);
}

RatFunc hall_pn(const QSym& x, int n) {
  return hall_inner(x, QSym::element(Basis::p, Partition{n}));
}

QSym skew_hl_P(const Partition& lambda, const Partition& mu) {
  const int d = lambda.size() - mu.size();
  if (d < 0) return QSym(Basis::m);
  auto nus = partitions_of(d);
  const size_t k = nus.size();
  const QSym& pl = hl_P(lambda);
  const QSym& pm = hl_P(mu);
  Matrix<RatFunc> gram(k, std::vector<RatFunc>(k));
  Matrix<RatFunc> a(1, std::vector<RatFunc>(k));
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = i; j < k; ++j) gram[i][j] = gram[j][i] = deformed_inner(hl_P(nus[i]), hl_P(nus[j]), InnerKind::t);
    a[0][i] = deformed_inner(pl, multiply(pm, hl_P(nus[i])), InnerKind::t);
  }
  // coefficients c with sum_i c_i <P_i, P_j> = a_j
  auto c = solve_right(std::move(gram), std::move(a));
  QSym out(Basis::m);
  for (size_t i = 0; i < k; ++i)
    if (!is_zero(c[0][i])) out += hl_P(nus[i]) * c[0][i];
  return out;
}

}  // namespace symfun
