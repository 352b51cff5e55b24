#pragma once

#include <string>
#include <vector>

#include "symfun/linalg.hpp"
#include "symfun/partition.hpp"
#include "symfun/rational.hpp"

namespace symfun {

/// Classical bases: monomial, complete, elementary, power sum, Schur, forgotten.
enum class Basis { m, h, e, p, s, f };

char basis_letter(Basis b);
/// Throws ParseError for unknown letters.
Basis basis_from_letter(char c);

/// Change of basis in one degree. entries[i][j] is the coefficient of to_j in
/// from_i, rows and columns indexed by partitions_of(degree).
struct TransitionMatrix {
  Basis from;
  Basis to;
  int degree;
  std::vector<Partition> index;
  Matrix<Rational> entries;
};

/// Cached and safe for concurrent callers; every classical transition is rational,
/// so one matrix serves every coefficient field.
const TransitionMatrix& transition(Basis from, Basis to, int degree);

/// Position of lambda in partitions_of(lambda.size()).
std::size_t partition_index(const Partition& lambda);

/// Raw expansions into the monomial basis by direct counting (no matrix inversion).
/// Coefficient of m_mu in p_lambda: maps from parts of lambda to rows of mu with matching sums.
Integer power_sum_monomial_coefficient(const Partition& lambda, const Partition& mu);
/// Coefficient of m_mu in h_lambda: nonnegative integer matrices with row sums lambda, column sums mu.
Integer complete_monomial_coefficient(const Partition& lambda, const Partition& mu);
/// Coefficient of m_mu in e_lambda: 0-1 matrices with row sums lambda, column sums mu.
Integer elementary_monomial_coefficient(const Partition& lambda, const Partition& mu);
/// Jacobi-Trudi: h-expansion of s_lambda as (partition, coefficient) pairs.
std::vector<std::pair<Partition, Integer>> jacobi_trudi(const Partition& lambda);

}  // namespace symfun
