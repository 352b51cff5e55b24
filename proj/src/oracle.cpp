#include "symfun/oracle.hpp"

#include <future>
#include <map>

#include "symfun/errors.hpp"

namespace symfun {

namespace {

bool classical(const FamilySpec& spec) { return spec.ring == Ring::Q || spec.ring == Ring::Z; }

const SequenceEntry& entry(const Sequence& seq, int n) {
  if (n < 1 || n > static_cast<int>(seq.entries.size()))
    throw Error("sequence has no entry for n=" + std::to_string(n));
  return seq.entries[static_cast<size_t>(n - 1)];
}

Sym classical_element(const Sequence& seq, int n) {
  const auto& e = entry(seq, n);
  switch (seq.spec.family) {
    case Family::m: return Sym::element(Basis::m, e.lambda);
    case Family::f: return Sym::element(Basis::f, e.lambda);
    case Family::s: return Sym::element(Basis::s, e.lambda);
    case Family::p: return Sym::element(Basis::p, e.lambda);
    case Family::skew_m: return skew(Basis::m, e.lambda, e.mu);
    case Family::skew_f: return skew(Basis::f, e.lambda, e.mu);
    case Family::skew_h: return skew(Basis::h, e.lambda, e.mu);
    case Family::skew_e: return skew(Basis::e, e.lambda, e.mu);
    case Family::skew_s: return skew(Basis::s, e.lambda, e.mu);
    default: throw UnsupportedCombination(family_name(seq.spec.family) + " is not classical");
  }
}

QSym deformed_element(const Sequence& seq, int n) {
  const auto& e = entry(seq, n);
  switch (seq.spec.family) {
    case Family::hl_P: return hl_P(e.lambda);
    case Family::hl_Q: return hl_Q(e.lambda);
    case Family::big_S: return big_schur(e.lambda);
    case Family::whittaker: return whittaker(e.lambda);
    case Family::mac_P: return mac_P(e.lambda);
    case Family::mac_J: return mac_J(e.lambda);
    default: throw UnsupportedCombination(family_name(seq.spec.family) + " is not deformed");
  }
}

// h_a h_b = h_{a u b}
Sym multiply_h(const Sym& x, const Sym& y) {
  Sym out(Basis::h);
  for (const auto& [a, va] : x.coeffs())
    for (const auto& [b, vb] : y.coeffs()) out.add(join(a, b), va * vb);
  return out;
}

// Rows of the degree matrix: products over the parts, memoised on the partition.
template <class F, class Elem, class Mul>
Matrix<F> product_rows(int n, Basis work, Elem&& element, Mul&& mul) {
  std::map<Partition, SymFunc<F>> memo;
  std::map<int, SymFunc<F>> generators;
  auto gen = [&](int j) -> const SymFunc<F>& {
    auto it = generators.find(j);
    if (it == generators.end()) it = generators.emplace(j, to_basis(element(j), work)).first;
    return it->second;
  };
  auto product = [&](auto&& self, const Partition& lambda) -> SymFunc<F> {
    if (lambda.length() == 1) return gen(lambda.part(0));
    if (auto it = memo.find(lambda); it != memo.end()) return it->second;
    SymFunc<F> v = mul(gen(lambda.part(0)), self(self, lambda.without_part(lambda.part(0))));
    memo.emplace(lambda, v);
    return v;
  };
  auto index = partitions_of(n);
  Matrix<F> rows(index.size(), std::vector<F>(index.size(), F(0)));
  for (size_t i = 0; i < index.size(); ++i) {
    SymFunc<F> u = to_basis(product(product, index[i]), Basis::m);
    for (const auto& [mu, c] : u.coeffs()) rows[i][partition_index(mu)] = c;
  }
  return rows;
}

bool ok(const FamilySpec& spec, const InnerValue& v) { return spec.ring == Ring::Z ? is_unit(v) : is_nonzero(v); }

// Value of f at the specialisation; f must be regular there.
InnerValue specialize(const FamilySpec& spec, const RatFunc& f) {
  const bool in_q = spec.family == Family::whittaker;
  if (std::holds_alternative<std::monostate>(spec.at)) return f;
  if (auto* r = std::get_if<RootOfUnity>(&spec.at)) {
    RatFunc g = in_q ? f.q_as_t() : f;
    if (cyclotomic_multiplicity(g.denominator(), r->k) > 0) throw PoleAtRootOfUnity(r->k);
    return specialize_root_of_unity(g, r->k);
  }
  if (auto* v = std::get_if<ParameterValue>(&spec.at)) return in_q ? f.evaluate(v->value, 0) : f.evaluate(0, v->value);
  const auto& p = std::get<ParameterPair>(spec.at);
  return f.evaluate(p.q, p.t);
}

void require_regular(const FamilySpec& spec, const Matrix<RatFunc>& m) {
  for (const auto& row : m)
    for (const auto& x : row)
      if (!x.is_polynomial()) specialize(spec, RatFunc(Poly(1)) / RatFunc(x.denominator()));
}

}  // namespace

QSym sequence_element(const Sequence& seq, int n) {
  validate(seq.spec);
  return classical(seq.spec) ? lift(classical_element(seq, n)) : deformed_element(seq, n);
}

DegreeMatrix degree_matrix(const Sequence& seq, int n) {
  validate(seq.spec);
  if (n < 1) throw Error("degree must be positive");
  DegreeMatrix out;
  out.degree = n;
  out.index = partitions_of(n);
  auto classical_gen = [&](int j) { return classical_element(seq, j); };
  if (seq.spec.ring == Ring::Z) {
    out.entries = product_rows<Rational>(n, Basis::h, classical_gen, multiply_h);
  } else if (seq.spec.ring == Ring::Q) {
    out.entries = product_rows<Rational>(n, Basis::p, classical_gen, multiply<Rational>);
  } else {
    out.entries = product_rows<RatFunc>(n, Basis::p, [&](int j) { return deformed_element(seq, j); }, multiply<RatFunc>);
  }
  return out;
}

InnerValue degree_determinant(const Sequence& seq, const DegreeMatrix& m) {
  if (auto* r = std::get_if<Matrix<Rational>>(&m.entries)) {
    if (seq.spec.ring != Ring::Z) return determinant(*r);
    Matrix<Integer> z(r->size());
    for (size_t i = 0; i < r->size(); ++i)
      for (const auto& x : (*r)[i]) {
        if (x.get_den() != 1) throw Error("non-integral entry in an integral degree matrix");
        z[i].push_back(x.get_num());
      }
    return Rational(bareiss_determinant(std::move(z)));
  }
  const auto& f = std::get<Matrix<RatFunc>>(m.entries);
  require_regular(seq.spec, f);
  return specialize(seq.spec, determinant(f));
}

int default_max_degree(Ring ring) {
  switch (ring) {
    case Ring::Q:
    case Ring::Z: return 6;
    case Ring::Qt: return 5;
    case Ring::Qqt: return 4;
  }
  return 4;
}

std::vector<OracleDegree> oracle_verdict(const Sequence& seq, int max_degree, int jobs) {
  validate(seq.spec);
  if (max_degree > static_cast<int>(seq.entries.size()))
    throw Error("sequence defines only " + std::to_string(seq.entries.size()) + " degrees");
  check_grading(seq.spec, seq.entries);
  auto one = [&seq](int n) {
    OracleDegree d;
    d.n = n;
    d.det = degree_determinant(seq, degree_matrix(seq, n));
    d.det_ok = ok(seq.spec, d.det);
    if (classical(seq.spec)) {
      Sym u = classical_element(seq, n);
      d.inner = hall_inner(u, Sym::element(Basis::p, Partition{n}));
    } else {
      QSym u = deformed_element(seq, n);
      for (const auto& [p, c] : u.coeffs())
        if (!c.is_polynomial()) specialize(seq.spec, RatFunc(Poly(1)) / RatFunc(c.denominator()));
      d.inner = specialize(seq.spec, hall_pn(u, n));
    }
    d.inner_ok = ok(seq.spec, d.inner);
    return d;
  };
  std::vector<OracleDegree> out;
  if (jobs <= 1) {
    for (int n = 1; n <= max_degree; ++n) out.push_back(one(n));
  } else {
    std::vector<std::future<OracleDegree>> pending;
    for (int n = 1; n <= max_degree; ++n) pending.push_back(std::async(std::launch::async, one, n));
    for (auto& f : pending) out.push_back(f.get());
  }
  bool independent = true, generates = true;
  for (auto& d : out) {
    independent = independent && is_nonzero(d.det);
    generates = generates && d.det_ok;
    d.independent = independent;
    d.generates = generates;
  }
  return out;
}

std::vector<ProbeRecord> conjecture_probe(const std::vector<SequenceEntry>& entries, int max_degree) {
  if (max_degree > 5) throw Error("the probe is capped at degree 5");
  const int top = std::min<int>(max_degree, static_cast<int>(entries.size()));
  check_grading(FamilySpec{Family::skew_s, Ring::Q, {}, 16}, entries);
  std::vector<ProbeRecord> out;
  for (int n = 1; n <= top; ++n) {
    const auto& e = entries[static_cast<size_t>(n - 1)];
    ProbeRecord r;
    r.n = n;
    r.lambda = e.lambda;
    r.mu = e.mu;
    r.value = deformed_inner(skew_hl_P(e.lambda, e.mu), QSym::element(Basis::p, Partition{n}), InnerKind::t);
    r.nonzero = !r.value.is_zero();
    SkewPartition shape{e.lambda, e.mu};
    r.contains = contains(e.mu, e.lambda);
    r.column_separated = r.contains && column_separated(shape);
    r.ribbon = is_ribbon(shape);
    r.candidate = r.nonzero && (!r.contains || r.column_separated);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace symfun
