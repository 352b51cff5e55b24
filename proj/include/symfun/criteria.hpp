#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "symfun/cyclo.hpp"
#include "symfun/partition.hpp"
#include "symfun/ratfunc.hpp"

namespace symfun {

enum class Family {
  m, f, skew_m, skew_f, skew_h, skew_e, s, skew_s,
  hl_P, hl_Q, big_S, whittaker, mac_P, mac_J,
  /// power sums; only meaningful to the oracle
  p,
};

/// Q and Z for the classical families; Qt = Q(t) for the one-parameter families
/// (the parameter of whittaker is q); Qqt for mac-P and mac-J.
enum class Ring { Q, Z, Qt, Qqt };

/// The parameter specialised at a primitive k-th root of unity.
struct RootOfUnity {
  int k;
};
/// The parameter specialised at a rational value.
struct ParameterValue {
  Rational value;
};
/// (q, t) = (q, t) values for the two-parameter families.
struct ParameterPair {
  Rational q;
  Rational t;
};
using Specialization = std::variant<std::monostate, RootOfUnity, ParameterValue, ParameterPair>;

struct FamilySpec {
  Family family = Family::m;
  Ring ring = Ring::Q;
  Specialization at;
  /// Exponent bound for the two-parameter independence hypothesis.
  int exponent_bound = 16;
};

std::string family_name(Family f);
/// "skew-m", "hl-P", ...; also accepts "h-skew" and "e-skew". Throws ParseError.
Family parse_family(const std::string& name);
std::string ring_name(Ring r);
Ring parse_ring(const std::string& name);
bool is_skew(Family f);
/// Throws UnsupportedCombination for family/ring/specialisation combinations not treated.
void validate(const FamilySpec& spec);
std::string describe(const Specialization& at);

/// The clause that decided a criterion.
enum class Reason {
  any_partition,
  all_ones,
  not_all_ones,
  refines_n,
  does_not_refine_n,
  monomial_unit_pair,
  not_monomial_unit_pair,
  first_part_at_least_n,
  first_part_below_n,
  complete_unit_pair,
  not_complete_unit_pair,
  hook,
  not_hook,
  ribbon,
  not_ribbon,
  generic_parameter,
  floor_condition,
  floor_condition_fails,
  root_coprime_and_short,
  root_divides_n,
  root_too_short,
  trivial_root_vanishes,
  hook_root_divides_n,
  first_part_at_most_k,
  first_part_exceeds_k,
  parameters_independent,
  parameters_dependent_nonzero,
  parameters_dependent_zero,
  specialization_pole,
};

std::string reason_name(Reason r);

struct Criterion {
  bool holds = false;
  Reason reason = Reason::any_partition;
  /// Case number for the integral skew classifications, 0 otherwise.
  int case_number = 0;
  std::string label() const;
};

/// Per-degree criterion for u_n = family member indexed by lambda/mu with |lambda| - |mu| = n.
/// Throws SizeMismatch on inconsistent sizes and UnsupportedCombination.
Criterion criterion(const FamilySpec& spec, const Partition& lambda, const Partition& mu, int n);

/// Matching case (1-4) of the integral skew monomial classification, 0 if none.
int monomial_unit_case(const Partition& lambda, const Partition& mu, int n);
/// Matching case (1-3) of the integral skew complete classification (lambda_1 >= n assumed), 0 if none.
int complete_unit_case(const Partition& lambda, const Partition& mu, int n);
/// sum_i floor(m_i / k) against the threshold for the root-of-unity HL-P clause.
bool hl_floor_condition(const Partition& lambda, int n, int k);

/// <u_n, p_n> under the Hall pairing, in the coefficient domain of the specialisation.
using InnerValue = std::variant<Rational, RatFunc, CycloElem>;
std::string render(const InnerValue& v);
bool is_nonzero(const InnerValue& v);
/// +-1 for rationals; false otherwise.
bool is_unit(const InnerValue& v);

/// Closed-form value of <u_n, p_n>; throws PoleAtRootOfUnity / ZeroDenominator on poles.
InnerValue inner_value(const FamilySpec& spec, const Partition& lambda, const Partition& mu, int n);

struct SequenceEntry {
  Partition lambda;
  Partition mu;
};

struct DegreeVerdict {
  int n;
  Criterion criterion;
  /// Rendered inner value, or empty when it is undefined at the specialisation.
  std::string value;
};

struct SeqVerdict {
  std::vector<DegreeVerdict> per_n;
  bool overall = true;
};

/// Validates grading (entry i has size difference i + 1; GradingViolation otherwise) and
/// evaluates every degree.
SeqVerdict check_sequence(const FamilySpec& spec, const std::vector<SequenceEntry>& seq);
void check_grading(const FamilySpec& spec, const std::vector<SequenceEntry>& seq);

}  // namespace symfun
