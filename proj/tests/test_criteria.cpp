#include <gtest/gtest.h>

#include "symfun/criteria.hpp"
#include "symfun/deformed.hpp"
#include "symfun/errors.hpp"
#include "symfun/symfunc.hpp"

using namespace symfun;

namespace {

FamilySpec spec(Family f, Ring r, Specialization at = {}) { return FamilySpec{f, r, at, 16}; }

Basis classical_basis(Family f) {
  switch (f) {
    case Family::m: case Family::skew_m: return Basis::m;
    case Family::f: case Family::skew_f: return Basis::f;
    case Family::skew_h: return Basis::h;
    case Family::skew_e: return Basis::e;
    default: return Basis::s;
  }
}

// <u_n, p_n> from the general skew machinery
Rational classical_pairing(Family f, const Partition& l, const Partition& mu, int n) {
  return hall_inner(skew(classical_basis(f), l, mu), Sym::element(Basis::p, Partition{n}));
}

const QSym& constructed(Family f, const Partition& l) {
  static std::map<std::pair<Family, Partition>, QSym> cache;
  auto key = std::make_pair(f, l);
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  QSym x;
  switch (f) {
    case Family::hl_P: x = hl_P(l); break;
    case Family::hl_Q: x = hl_Q(l); break;
    case Family::big_S: x = big_schur(l); break;
    case Family::whittaker: x = whittaker(l); break;
    case Family::mac_P: x = mac_P(l); break;
    default: x = mac_J(l); break;
  }
  return cache.emplace(key, std::move(x)).first->second;
}

std::vector<Specialization> one_parameter_points() {
  return {std::monostate{}, RootOfUnity{1}, RootOfUnity{2}, RootOfUnity{3}, RootOfUnity{4}, RootOfUnity{6},
          ParameterValue{0}, ParameterValue{1}, ParameterValue{-1}, ParameterValue{2}, ParameterValue{Rational(1, 3)}};
}

std::vector<Specialization> two_parameter_points() {
  return {std::monostate{},
          ParameterPair{2, 3},
          ParameterPair{Rational(1, 2), Rational(1, 3)},
          ParameterPair{2, 4},
          ParameterPair{4, 2},
          ParameterPair{3, 3},
          ParameterPair{0, 2},
          ParameterPair{2, -1},
          ParameterPair{-1, 2},
          ParameterPair{1, 2},
          ParameterPair{Rational(1, 2), 2}};
}

bool deformed_nonzero(Family f, const Partition& l, const Specialization& at) {
  const int n = l.size();
  RatFunc v = hall_pn(constructed(f, l), n);
  if (f == Family::whittaker) v = v.q_as_t();
  if (std::holds_alternative<std::monostate>(at)) return !v.is_zero();
  if (auto* r = std::get_if<RootOfUnity>(&at)) return !specialize_root_of_unity(v, r->k).is_zero();
  if (auto* p = std::get_if<ParameterValue>(&at)) return v.evaluate(0, p->value) != 0;
  const auto& pq = std::get<ParameterPair>(at);
  return v.evaluate(pq.q, pq.t) != 0;
}

}  // namespace

TEST(Criteria, Names) {
  for (Family f : {Family::m, Family::f, Family::skew_m, Family::skew_f, Family::skew_h, Family::skew_e, Family::s,
                   Family::skew_s, Family::hl_P, Family::hl_Q, Family::big_S, Family::whittaker, Family::mac_P,
                   Family::mac_J})
    EXPECT_EQ(parse_family(family_name(f)), f);
  EXPECT_EQ(parse_family("h-skew"), Family::skew_h);
  EXPECT_EQ(parse_family("e-skew"), Family::skew_e);
  EXPECT_THROW(parse_family("x"), ParseError);
  EXPECT_EQ(parse_ring("Q(t)"), Ring::Qt);
  EXPECT_EQ(parse_ring("F"), Ring::Q);
  EXPECT_THROW(parse_ring("R"), ParseError);
  EXPECT_EQ(describe(RootOfUnity{3}), "root:3");
  EXPECT_EQ(describe(ParameterPair{2, Rational(1, 2)}), "q=2,t=1/2");
}

TEST(Criteria, Examples) {
  auto c = criterion(spec(Family::skew_m, Ring::Q), {4, 3, 1}, {3}, 5);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.reason, Reason::refines_n);
  c = criterion(spec(Family::skew_m, Ring::Z), {3, 3, 1, 1}, {2, 2, 2}, 2);
  EXPECT_TRUE(c.holds);
  EXPECT_EQ(c.case_number, 4);
  EXPECT_EQ(c.label(), "monomial-unit-pair-case-4");
  c = criterion(spec(Family::whittaker, Ring::Qt, RootOfUnity{2}), {3, 1}, {}, 4);
  EXPECT_FALSE(c.holds);
  EXPECT_EQ(c.reason, Reason::first_part_exceeds_k);
  EXPECT_EQ(criterion(spec(Family::s, Ring::Q), {3, 1, 1}, {}, 5).reason, Reason::hook);
  EXPECT_EQ(criterion(spec(Family::m, Ring::Z), {1, 1, 1}, {}, 3).reason, Reason::all_ones);
  EXPECT_FALSE(criterion(spec(Family::m, Ring::Z), {2, 1}, {}, 3).holds);
  EXPECT_EQ(criterion(spec(Family::hl_P, Ring::Qt, ParameterValue{0}), {2, 2}, {}, 4).reason, Reason::not_hook);
  EXPECT_EQ(criterion(spec(Family::hl_Q, Ring::Qt, RootOfUnity{1}), {2}, {}, 2).reason,
            Reason::trivial_root_vanishes);
  EXPECT_EQ(criterion(spec(Family::hl_Q, Ring::Qt, RootOfUnity{3}), {2, 1, 1, 1}, {}, 5).reason, Reason::root_too_short);
  EXPECT_EQ(criterion(spec(Family::mac_P, Ring::Qqt, ParameterPair{2, 3}), {2}, {}, 2).reason,
            Reason::parameters_independent);
  EXPECT_EQ(criterion(spec(Family::mac_P, Ring::Qqt, ParameterPair{3, 3}), {2, 2}, {}, 4).reason,
            Reason::parameters_dependent_zero);
}

TEST(Criteria, IntegralCaseNumbers) {
  EXPECT_EQ(monomial_unit_case({1, 1, 1}, {1}, 2), 1);
  EXPECT_EQ(monomial_unit_case({3, 1}, {1, 1, 1}, 1), 2);
  EXPECT_EQ(monomial_unit_case({1, 1, 1, 1}, {2}, 2), 3);
  EXPECT_EQ(monomial_unit_case({3, 3, 1, 1}, {2, 2, 2}, 2), 4);
  EXPECT_EQ(monomial_unit_case({3, 2}, {1}, 4), 0);
  EXPECT_EQ(complete_unit_case({4, 1}, {2}, 3), 1);
  EXPECT_EQ(complete_unit_case({3, 2}, {1, 1}, 3), 2);
  EXPECT_EQ(complete_unit_case({5}, {2}, 3), 1);
  EXPECT_EQ(complete_unit_case({5}, {1, 1}, 3), 3);
  EXPECT_EQ(complete_unit_case({3, 3}, {3}, 3), 0);
}

TEST(Criteria, Errors) {
  EXPECT_THROW(criterion(spec(Family::hl_P, Ring::Z), {2}, {}, 2), UnsupportedCombination);
  EXPECT_THROW(criterion(spec(Family::s, Ring::Q, RootOfUnity{2}), {2}, {}, 2), UnsupportedCombination);
  EXPECT_THROW(criterion(spec(Family::mac_P, Ring::Qqt, RootOfUnity{2}), {2}, {}, 2), UnsupportedCombination);
  EXPECT_THROW(criterion(spec(Family::mac_P, Ring::Qt), {2}, {}, 2), UnsupportedCombination);
  EXPECT_THROW(criterion(spec(Family::s, Ring::Q), {3}, {1}, 2), UnsupportedCombination);
  EXPECT_THROW(criterion(spec(Family::s, Ring::Q), {3}, {}, 2), SizeMismatch);
  EXPECT_THROW(criterion(spec(Family::p, Ring::Q), {2}, {}, 2), UnsupportedCombination);
}

TEST(Criteria, ClassicalMatchesPairing) {
  for (Family f : {Family::m, Family::f, Family::s})
    for (Ring r : {Ring::Q, Ring::Z})
      for (int n = 1; n <= 6; ++n)
        for (const auto& l : partitions_of(n)) {
          Rational v = classical_pairing(f, l, {}, n);
          bool expected = r == Ring::Z ? (v == 1 || v == -1) : v != 0;
          ASSERT_EQ(criterion(spec(f, r), l, {}, n).holds, expected) << family_name(f) << " " << l;
          ASSERT_EQ(std::get<Rational>(inner_value(spec(f, r), l, {}, n)), v) << family_name(f) << " " << l;
        }
  for (Family f : {Family::skew_m, Family::skew_f, Family::skew_h, Family::skew_e, Family::skew_s})
    for (int n = 1; n <= 5; ++n)
      for (int k = 0; k <= 3; ++k)
        for (const auto& mu : partitions_of(k))
          for (const auto& l : partitions_of(n + k)) {
            Rational v = classical_pairing(f, l, mu, n);
            ASSERT_EQ(criterion(spec(f, Ring::Q), l, mu, n).holds, v != 0) << family_name(f) << " " << l << "/" << mu;
            ASSERT_EQ(criterion(spec(f, Ring::Z), l, mu, n).holds, v == 1 || v == -1)
                << family_name(f) << " " << l << "/" << mu;
            ASSERT_EQ(std::get<Rational>(inner_value(spec(f, Ring::Q), l, mu, n)), v);
          }
}

TEST(Criteria, OneParameterMatchesConstruction) {
  for (Family f : {Family::hl_P, Family::hl_Q, Family::big_S, Family::whittaker})
    for (const auto& at : one_parameter_points())
      for (int n = 1; n <= 5; ++n)
        for (const auto& l : partitions_of(n)) {
          auto s = spec(f, Ring::Qt, at);
          bool nonzero = deformed_nonzero(f, l, at);
          EXPECT_EQ(criterion(s, l, {}, n).holds, nonzero) << family_name(f) << " " << describe(at) << " " << l;
          EXPECT_EQ(is_nonzero(inner_value(s, l, {}, n)), nonzero) << family_name(f) << " " << describe(at) << " " << l;
        }
}

TEST(Criteria, TwoParameterMatchesConstruction) {
  for (Family f : {Family::mac_P, Family::mac_J})
    for (const auto& at : two_parameter_points())
      for (int n = 1; n <= 4; ++n)
        for (const auto& l : partitions_of(n)) {
          auto s = spec(f, Ring::Qqt, at);
          auto c = criterion(s, l, {}, n);
          try {
            bool nonzero = deformed_nonzero(f, l, at);
            EXPECT_EQ(c.holds, nonzero) << family_name(f) << " " << describe(at) << " " << l;
          } catch (const ZeroDenominator&) {
            EXPECT_EQ(c.reason, Reason::specialization_pole) << family_name(f) << " " << describe(at) << " " << l;
          }
        }
}

TEST(Criteria, IndependenceBoundIsConfigurable) {
  auto s = spec(Family::mac_P, Ring::Qqt, ParameterPair{2, 8});
  EXPECT_EQ(criterion(s, {2}, {}, 2).reason, Reason::parameters_dependent_nonzero);
  s.exponent_bound = 2;
  EXPECT_EQ(criterion(s, {2}, {}, 2).reason, Reason::parameters_independent);
}

TEST(Criteria, MonomialClassificationMatchesTabloidSum) {
  for (int k = 0; k <= 4; ++k)
    for (int n = 1; n <= 4; ++n)
      for (const auto& mu : partitions_of(k))
        for (const auto& l : partitions_of(n + k))
          ASSERT_EQ(skew_monomial_tabloid_sum(l, mu, n) == 1, monomial_unit_case(l, mu, n) != 0) << l << "/" << mu;
}

TEST(Criteria, OmegaDuality) {
  for (Ring r : {Ring::Q, Ring::Z})
    for (int d = 1; d <= 8; ++d)
      for (int n = 1; n <= d; ++n)
        for (const auto& l : partitions_of(d))
          for (const auto& mu : partitions_of(d - n)) {
            auto h = criterion(spec(Family::skew_h, r), l, mu, n);
            auto e = criterion(spec(Family::skew_e, r), l, mu, n);
            ASSERT_EQ(h.holds, e.holds);
            ASSERT_EQ(h.label(), e.label());
          }
}

TEST(Criteria, Sequences) {
  std::vector<SequenceEntry> any;
  for (int n = 1; n <= 6; ++n) any.push_back({Partition{n - n / 2, n / 2}, {}});
  EXPECT_TRUE(check_sequence(spec(Family::m, Ring::Q), any).overall);
  EXPECT_FALSE(check_sequence(spec(Family::m, Ring::Z), any).overall);

  std::vector<SequenceEntry> hooks{{{1}, {}}};
  for (int n = 2; n <= 6; ++n) hooks.push_back({{n - 1, 1}, {}});
  auto v = check_sequence(spec(Family::s, Ring::Q), hooks);
  EXPECT_TRUE(v.overall);
  ASSERT_EQ(v.per_n.size(), 6u);
  EXPECT_EQ(v.per_n[2].value, "-1");

  std::vector<SequenceEntry> rows;
  for (int n = 1; n <= 4; ++n) rows.push_back({Partition{n}, {}});
  v = check_sequence(spec(Family::hl_Q, Ring::Qt, RootOfUnity{3}), rows);
  EXPECT_FALSE(v.overall);
  EXPECT_TRUE(v.per_n[0].criterion.holds);
  EXPECT_TRUE(v.per_n[1].criterion.holds);
  EXPECT_FALSE(v.per_n[2].criterion.holds);
  EXPECT_EQ(v.per_n[2].criterion.reason, Reason::root_divides_n);
  EXPECT_EQ(v.per_n[2].value, "0");

  v = check_sequence(spec(Family::hl_P, Ring::Qt), rows);
  EXPECT_TRUE(v.overall);
  EXPECT_EQ(v.per_n[1].value, "(t + 1)");

  v = check_sequence(spec(Family::mac_P, Ring::Qqt, ParameterPair{Rational(1, 2), 2}), rows);
  EXPECT_EQ(v.per_n[1].criterion.reason, Reason::specialization_pole);
  EXPECT_EQ(v.per_n[1].value, "");
}

TEST(Criteria, GradingViolations) {
  std::vector<SequenceEntry> bad{{{1}, {}}, {{3}, {}}};
  try {
    check_sequence(spec(Family::s, Ring::Q), bad);
    FAIL();
  } catch (const GradingViolation& e) {
    EXPECT_EQ(e.index(), 2);
  }
  std::vector<SequenceEntry> skewed{{{2}, {1}}};
  EXPECT_THROW(check_sequence(spec(Family::s, Ring::Q), skewed), GradingViolation);
  EXPECT_NO_THROW(check_sequence(spec(Family::skew_s, Ring::Q), skewed));
  EXPECT_THROW(check_sequence(spec(Family::hl_P, Ring::Q), {}), UnsupportedCombination);
}
