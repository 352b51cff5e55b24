#include "symfun/criteria.hpp"

#include <numeric>

#include "symfun/deformed.hpp"
#include "symfun/errors.hpp"
#include "symfun/symfunc.hpp"

namespace symfun {

namespace {

struct FamilyName {
  Family family;
  const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::m, "m"},           {Family::f, "f"},           {Family::skew_m, "skew-m"},
    {Family::skew_f, "skew-f"}, {Family::skew_h, "skew-h"}, {Family::skew_e, "skew-e"},
    {Family::s, "s"},           {Family::skew_s, "skew-s"}, {Family::hl_P, "hl-P"},
    {Family::hl_Q, "hl-Q"},     {Family::big_S, "big-S"},   {Family::whittaker, "whittaker"},
    {Family::mac_P, "mac-P"},   {Family::mac_J, "mac-J"},   {Family::p, "p"},
};

bool is_classical(Family f) {
  switch (f) {
    case Family::m: case Family::f: case Family::skew_m: case Family::skew_f:
    case Family::skew_h: case Family::skew_e: case Family::s: case Family::skew_s: case Family::p:
      return true;
    default:
      return false;
  }
}

bool is_two_parameter(Family f) { return f == Family::mac_P || f == Family::mac_J; }

int sign_pow(int e) { return e % 2 ? -1 : 1; }

Rational rational_pow(const Rational& x, int e) {
  Rational out(1);
  Rational base = e < 0 ? Rational(1) / x : x;
  for (int i = 0; i < std::abs(e); ++i) out *= base;
  return out;
}

// Rational values that are roots of unity: 1 (k = 1) and -1 (k = 2).
int root_order(const Rational& x) {
  if (x == 1) return 1;
  if (x == -1) return 2;
  return 0;
}

Criterion make(bool holds, Reason r, int case_number = 0) { return Criterion{holds, r, case_number}; }

Criterion hook_rule(const Partition& lambda) {
  return is_hook(lambda) ? make(true, Reason::hook) : make(false, Reason::not_hook);
}

Criterion hl_P_at_root(const Partition& lambda, int n, int k) {
  if (k == 1) return make(true, Reason::generic_parameter);
  return hl_floor_condition(lambda, n, k) ? make(true, Reason::floor_condition)
                                          : make(false, Reason::floor_condition_fails);
}

Criterion hl_Q_at_root(const Partition& lambda, int n, int k) {
  if (k == 1) return make(false, Reason::trivial_root_vanishes);
  if (n % k == 0) return make(false, Reason::root_divides_n);
  if (k <= lambda.length() - 1) return make(false, Reason::root_too_short);
  return make(true, Reason::root_coprime_and_short);
}

Criterion big_S_at_root(const Partition& lambda, int n, int k) {
  if (!is_hook(lambda)) return make(false, Reason::not_hook);
  if (n % k == 0) return make(false, Reason::hook_root_divides_n);
  return make(true, Reason::hook);
}

Criterion whittaker_at_root(const Partition& lambda, int k) {
  return lambda.part(0) <= k ? make(true, Reason::first_part_at_most_k) : make(false, Reason::first_part_exceeds_k);
}

bool mac_hypothesis(const ParameterPair& at, int bound, bool nonnegative) {
  if (is_zero(at.q) || is_zero(at.t) || root_order(at.t)) return false;
  const int lo = nonnegative ? 0 : -bound;
  for (int i = lo; i <= bound; ++i)
    for (int j = lo; j <= bound; ++j) {
      if (i == 0 && j == 0) continue;
      if (rational_pow(at.q, i) == rational_pow(at.t, j)) return false;
    }
  return true;
}

Criterion one_parameter(const FamilySpec& spec, const Partition& lambda, int n) {
  const Family f = spec.family;
  if (std::holds_alternative<std::monostate>(spec.at)) {
    if (f == Family::big_S) return hook_rule(lambda);
    return make(true, Reason::any_partition);
  }
  if (auto* r = std::get_if<RootOfUnity>(&spec.at)) {
    switch (f) {
      case Family::hl_P: return hl_P_at_root(lambda, n, r->k);
      case Family::hl_Q: return hl_Q_at_root(lambda, n, r->k);
      case Family::big_S: return big_S_at_root(lambda, n, r->k);
      case Family::whittaker: return whittaker_at_root(lambda, r->k);
      default: break;
    }
  }
  if (auto* v = std::get_if<ParameterValue>(&spec.at)) {
    if (is_zero(v->value)) return hook_rule(lambda);
    if (int k = root_order(v->value)) {
      FamilySpec at_root = spec;
      at_root.at = RootOfUnity{k};
      return one_parameter(at_root, lambda, n);
    }
    if (f == Family::big_S) return hook_rule(lambda);
    return make(true, Reason::generic_parameter);
  }
  throw UnsupportedCombination("specialisation " + describe(spec.at) + " for " + family_name(f));
}

Criterion two_parameter(const FamilySpec& spec, const Partition& lambda, const Partition& mu, int n) {
  if (std::holds_alternative<std::monostate>(spec.at)) return make(true, Reason::any_partition);
  const auto& at = std::get<ParameterPair>(spec.at);
  if (mac_hypothesis(at, spec.exponent_bound, spec.family == Family::mac_J))
    return make(true, Reason::parameters_independent);
  try {
    bool nonzero = is_nonzero(inner_value(spec, lambda, mu, n));
    return nonzero ? make(true, Reason::parameters_dependent_nonzero) : make(false, Reason::parameters_dependent_zero);
  } catch (const ZeroDenominator&) {
    return make(false, Reason::specialization_pole);
  }
}

Rational classical_value(Family f, const Partition& lambda, const Partition& mu, int n) {
  switch (f) {
    case Family::m:
    case Family::skew_m:
      return skew_monomial_pn_inner(lambda, mu, n);
    case Family::f:
    case Family::skew_f:
      return skew_monomial_pn_inner(lambda, mu, n) * sign_pow(n - 1);
    case Family::skew_h:
    case Family::skew_e: {
      Sym perp = pn_perp(Sym::element(Basis::h, lambda), n);
      Rational v = hall_inner(perp, Sym::element(Basis::h, mu));
      return f == Family::skew_e ? v * sign_pow(n - 1) : v;
    }
    case Family::s:
      return is_hook(lambda) ? Rational(sign_pow(n - lambda.part(0))) : Rational(0);
    case Family::skew_s: {
      SkewPartition shape{lambda, mu};
      return is_ribbon(shape) ? Rational(sign_pow(ribbon_height(shape))) : Rational(0);
    }
    case Family::p:
      return lambda == Partition{n} ? Rational(n) : Rational(0);
    default:
      throw UnsupportedCombination(family_name(f) + " is not a classical family");
  }
}

RatFunc deformed_closed(Family f, const Partition& lambda, int n) {
  switch (f) {
    case Family::hl_P: return hl_P_pn_closed(lambda, n);
    case Family::hl_Q: return hl_Q_pn_hall_closed(lambda, n);
    case Family::big_S: return big_schur_pn_closed(lambda, n);
    case Family::whittaker: return whittaker_pn_closed(lambda, n);
    case Family::mac_P: return mac_P_pn_closed(lambda, n);
    case Family::mac_J: return mac_J_pn_closed(lambda, n);
    default: throw UnsupportedCombination(family_name(f) + " is not a deformed family");
  }
}

void require_sizes(const Partition& lambda, const Partition& mu, int n) {
  if (n < 1) throw SizeMismatch("n must be positive");
  if (lambda.size() - mu.size() != n)
    throw SizeMismatch(SkewPartition{lambda, mu}.to_string() + " does not have size " + std::to_string(n));
}

}  // namespace

std::string family_name(Family f) {
  for (const auto& e : kFamilies)
    if (e.family == f) return e.name;
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "h-skew") return Family::skew_h;
  if (name == "e-skew") return Family::skew_e;
  for (const auto& e : kFamilies)
    if (name == e.name) return e.family;
  throw ParseError("unknown family '" + name + "'");
}

std::string ring_name(Ring r) {
  switch (r) {
    case Ring::Q: return "Q";
    case Ring::Z: return "Z";
    case Ring::Qt: return "Qt";
    case Ring::Qqt: return "Qqt";
  }
  return "?";
}

Ring parse_ring(const std::string& name) {
  if (name == "Q" || name == "F") return Ring::Q;
  if (name == "Z") return Ring::Z;
  if (name == "Qt" || name == "Q(t)") return Ring::Qt;
  if (name == "Qqt" || name == "Q(q,t)") return Ring::Qqt;
  throw ParseError("unknown ring '" + name + "'");
}

bool is_skew(Family f) {
  switch (f) {
    case Family::skew_m: case Family::skew_f: case Family::skew_h: case Family::skew_e: case Family::skew_s:
      return true;
    default:
      return false;
  }
}

std::string describe(const Specialization& at) {
  if (auto* r = std::get_if<RootOfUnity>(&at)) return "root:" + std::to_string(r->k);
  if (auto* v = std::get_if<ParameterValue>(&at)) return "value:" + to_string(v->value);
  if (auto* p = std::get_if<ParameterPair>(&at)) return "q=" + to_string(p->q) + ",t=" + to_string(p->t);
  return "none";
}

void validate(const FamilySpec& spec) {
  const Family f = spec.family;
  const bool none = std::holds_alternative<std::monostate>(spec.at);
  auto reject = [&](const std::string& why) {
    throw UnsupportedCombination(family_name(f) + " over " + ring_name(spec.ring) + ": " + why);
  };
  if (is_classical(f)) {
    if (spec.ring != Ring::Q && spec.ring != Ring::Z) reject("classical families need Q or Z");
    if (!none) reject("specialisation needs a deformed family");
  } else if (is_two_parameter(f)) {
    if (spec.ring != Ring::Qqt) reject("two-parameter families need Qqt");
    if (!none && !std::holds_alternative<ParameterPair>(spec.at)) reject("specialise with a (q,t) pair");
  } else {
    if (spec.ring != Ring::Qt) reject("one-parameter families need Qt");
    if (std::holds_alternative<ParameterPair>(spec.at)) reject("a (q,t) pair needs a two-parameter family");
  }
  if (auto* r = std::get_if<RootOfUnity>(&spec.at); r && r->k < 1) reject("root of unity order must be positive");
}

std::string reason_name(Reason r) {
  switch (r) {
    case Reason::any_partition: return "any-partition";
    case Reason::all_ones: return "all-ones";
    case Reason::not_all_ones: return "not-all-ones";
    case Reason::refines_n: return "refines-n";
    case Reason::does_not_refine_n: return "does-not-refine-n";
    case Reason::monomial_unit_pair: return "monomial-unit-pair";
    case Reason::not_monomial_unit_pair: return "not-monomial-unit-pair";
    case Reason::first_part_at_least_n: return "first-part-at-least-n";
    case Reason::first_part_below_n: return "first-part-below-n";
    case Reason::complete_unit_pair: return "complete-unit-pair";
    case Reason::not_complete_unit_pair: return "not-complete-unit-pair";
    case Reason::hook: return "hook";
    case Reason::not_hook: return "not-hook";
    case Reason::ribbon: return "ribbon";
    case Reason::not_ribbon: return "not-ribbon";
    case Reason::generic_parameter: return "generic-parameter";
    case Reason::floor_condition: return "floor-condition";
    case Reason::floor_condition_fails: return "floor-condition-fails";
    case Reason::root_coprime_and_short: return "root-coprime-and-short";
    case Reason::root_divides_n: return "root-divides-n";
    case Reason::root_too_short: return "root-too-short";
    case Reason::trivial_root_vanishes: return "trivial-root-vanishes";
    case Reason::hook_root_divides_n: return "hook-root-divides-n";
    case Reason::first_part_at_most_k: return "first-part-at-most-k";
    case Reason::first_part_exceeds_k: return "first-part-exceeds-k";
    case Reason::parameters_independent: return "parameters-independent";
    case Reason::parameters_dependent_nonzero: return "parameters-dependent-nonzero";
    case Reason::parameters_dependent_zero: return "parameters-dependent-zero";
    case Reason::specialization_pole: return "specialization-pole";
  }
  return "?";
}

std::string Criterion::label() const {
  std::string out = reason_name(reason);
  if (case_number) out += "-case-" + std::to_string(case_number);
  return out;
}

int monomial_unit_case(const Partition& lambda, const Partition& mu, int n) {
  const int m = mu.size();
  const bool lam_ones = lambda == Partition::rectangle(1, m + n);
  const bool mu_ones = mu == Partition::rectangle(1, m);
  const bool mu_rect = mu.empty() || is_rectangular(mu);
  // lambda = (c^d) u (1^n) with c > n and d >= 1
  int c = 0;
  if (lambda.multiplicity(1) == n && lambda.length() > n) {
    c = lambda.part(0);
    if (c <= n || lambda.multiplicity(c) != lambda.length() - n) c = 0;
  }
  if (lam_ones && mu_ones) return 1;
  if (c && mu_ones) return 2;
  if (lam_ones && mu_rect) return 3;
  if (c && mu_rect && !mu.empty() && std::gcd(mu.part(0), c) == 1) return 4;
  return 0;
}

int complete_unit_case(const Partition& lambda, const Partition& mu, int n) {
  const int m = lambda.size() - n;
  if (mu == Partition{m} && lambda.part(1) < n) return 1;
  if (m < n && lambda == Partition{n, m}) return 2;
  if (lambda == Partition{n + m}) return 3;
  return 0;
}

bool hl_floor_condition(const Partition& lambda, int n, int k) {
  int lhs = 0;
  const auto& parts = lambda.parts();
  for (size_t i = 0; i < parts.size(); ++i)
    if (i == 0 || parts[i] != parts[i - 1]) lhs += lambda.multiplicity(parts[i]) / k;
  const int l = lambda.length();
  const int rhs = n % k == 0 ? (l + k - 1) / k : (l - 1) / k;
  return lhs == rhs;
}

Criterion criterion(const FamilySpec& spec, const Partition& lambda, const Partition& mu, int n) {
  validate(spec);
  require_sizes(lambda, mu, n);
  if (!is_skew(spec.family) && !mu.empty())
    throw UnsupportedCombination(family_name(spec.family) + " takes a straight shape");
  const bool integral = spec.ring == Ring::Z;
  switch (spec.family) {
    case Family::m:
    case Family::f:
      if (!integral) return make(true, Reason::any_partition);
      return lambda == Partition::rectangle(1, n) ? make(true, Reason::all_ones) : make(false, Reason::not_all_ones);
    case Family::skew_m:
    case Family::skew_f:
      if (!integral)
        return refines(lambda, n) ? make(true, Reason::refines_n) : make(false, Reason::does_not_refine_n);
      if (int c = monomial_unit_case(lambda, mu, n)) return make(true, Reason::monomial_unit_pair, c);
      return make(false, Reason::not_monomial_unit_pair);
    case Family::skew_h:
    case Family::skew_e:
      if (lambda.part(0) < n) return make(false, Reason::first_part_below_n);
      if (!integral) return make(true, Reason::first_part_at_least_n);
      if (int c = complete_unit_case(lambda, mu, n)) return make(true, Reason::complete_unit_pair, c);
      return make(false, Reason::not_complete_unit_pair);
    case Family::s:
      return hook_rule(lambda);
    case Family::skew_s:
      return is_ribbon(SkewPartition{lambda, mu}) ? make(true, Reason::ribbon) : make(false, Reason::not_ribbon);
    case Family::hl_P:
    case Family::hl_Q:
    case Family::big_S:
    case Family::whittaker:
      return one_parameter(spec, lambda, n);
    case Family::mac_P:
    case Family::mac_J:
      return two_parameter(spec, lambda, mu, n);
    case Family::p:
      break;
  }
  throw UnsupportedCombination("no criterion for " + family_name(spec.family));
}

std::string render(const InnerValue& v) {
  return std::visit([](const auto& x) { return to_string(x); }, v);
}

bool is_nonzero(const InnerValue& v) {
  return std::visit([](const auto& x) { return !is_zero(x); }, v);
}

bool is_unit(const InnerValue& v) {
  auto* r = std::get_if<Rational>(&v);
  return r && (*r == 1 || *r == -1);
}

InnerValue inner_value(const FamilySpec& spec, const Partition& lambda, const Partition& mu, int n) {
  validate(spec);
  require_sizes(lambda, mu, n);
  if (is_classical(spec.family)) return classical_value(spec.family, lambda, mu, n);
  RatFunc f = deformed_closed(spec.family, lambda, n);
  const bool in_q = spec.family == Family::whittaker;
  if (std::holds_alternative<std::monostate>(spec.at)) return f;
  if (auto* r = std::get_if<RootOfUnity>(&spec.at)) return specialize_root_of_unity(in_q ? f.q_as_t() : f, r->k);
  if (auto* v = std::get_if<ParameterValue>(&spec.at)) return in_q ? f.evaluate(v->value, 0) : f.evaluate(0, v->value);
  const auto& p = std::get<ParameterPair>(spec.at);
  return f.evaluate(p.q, p.t);
}

void check_grading(const FamilySpec& spec, const std::vector<SequenceEntry>& seq) {
  for (size_t i = 0; i < seq.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    const auto& e = seq[i];
    if (!is_skew(spec.family) && !e.mu.empty()) throw GradingViolation(n, "straight family given a skew shape");
    if (e.lambda.size() - e.mu.size() != n)
      throw GradingViolation(n, SkewPartition{e.lambda, e.mu}.to_string() + " has size " +
                                    std::to_string(e.lambda.size() - e.mu.size()));
  }
}

SeqVerdict check_sequence(const FamilySpec& spec, const std::vector<SequenceEntry>& seq) {
  validate(spec);
  check_grading(spec, seq);
  SeqVerdict out;
  for (size_t i = 0; i < seq.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    DegreeVerdict d{n, criterion(spec, seq[i].lambda, seq[i].mu, n), ""};
    try {
      d.value = render(inner_value(spec, seq[i].lambda, seq[i].mu, n));
    } catch (const ZeroDenominator&) {
    } catch (const PoleAtRootOfUnity&) {
    }
    out.overall = out.overall && d.criterion.holds;
    out.per_n.push_back(std::move(d));
  }
  return out;
}

}  // namespace symfun
