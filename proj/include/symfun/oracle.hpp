#pragma once

#include <variant>
#include <vector>

#include "symfun/criteria.hpp"
#include "symfun/deformed.hpp"
#include "symfun/linalg.hpp"

namespace symfun {

/// A family together with its shapes; entries[i] is the shape of u_{i+1}.
struct Sequence {
  FamilySpec spec;
  std::vector<SequenceEntry> entries;
};

/// Rows u_lambda = prod u_{lambda_i} for lambda |- n, columns m_mu, both in canonical order.
/// Classical families carry rational entries (integral over Z); deformed ones carry
/// unspecialised rational functions.
struct DegreeMatrix {
  int degree = 0;
  std::vector<Partition> index;
  std::variant<Matrix<Rational>, Matrix<RatFunc>> entries;
};

/// u_n as a symmetric function (m basis for deformed families, any basis otherwise),
/// before any specialisation.
QSym sequence_element(const Sequence& seq, int n);

DegreeMatrix degree_matrix(const Sequence& seq, int n);

/// Exact determinant of the degree matrix at the sequence's specialisation. Integral rings use
/// fraction-free elimination; specialised families are reduced over Q(t) or Q(q,t) first,
/// after checking every entry is regular at the point. Throws PoleAtRootOfUnity / ZeroDenominator.
InnerValue degree_determinant(const Sequence& seq, const DegreeMatrix& m);

struct OracleDegree {
  int n = 0;
  InnerValue det;
  /// det != 0 (fields) or det = +-1 (Z) at this degree
  bool det_ok = false;
  /// det != 0 at every degree <= n
  bool independent = false;
  /// det_ok at every degree <= n
  bool generates = false;
  /// <u_n, p_n> recomputed from the full expansion of u_n
  InnerValue inner;
  /// inner != 0 (fields) or inner = +-1 (Z)
  bool inner_ok = false;
};

/// Degrees 1..max_degree, each computed independently; `jobs` > 1 runs them concurrently.
/// Output is always in degree order.
std::vector<OracleDegree> oracle_verdict(const Sequence& seq, int max_degree, int jobs = 1);

/// Default degree caps: 6 over Q and Z, 5 over Q(t), 4 over Q(q,t).
int default_max_degree(Ring ring);

struct ProbeRecord {
  int n = 0;
  Partition lambda;
  Partition mu;
  /// <P_{lambda/mu}, p_n>_t
  RatFunc value;
  bool nonzero = false;
  bool contains = false;
  bool column_separated = false;
  bool ribbon = false;
  /// nonzero although mu is not contained in lambda or the shape is column-separated
  bool candidate = false;
};

/// Experimental data on skew Hall-Littlewood sequences for n <= min(N, 5).
std::vector<ProbeRecord> conjecture_probe(const std::vector<SequenceEntry>& entries, int max_degree);

}  // namespace symfun
