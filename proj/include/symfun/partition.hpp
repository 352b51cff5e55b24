#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace symfun {

/// Integer partition: weakly decreasing positive parts, trailing zeros never stored.
class Partition {
 public:
  Partition() = default;
  /// Throws Error if parts are not weakly decreasing; zero parts are dropped.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  /// Sorts arbitrary nonnegative parts into a partition.
  static Partition from_unsorted(std::vector<int> parts);
  /// (v^count)
  static Partition rectangle(int v, int count);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// i-th part, 0-based; 0 beyond the length.
  int part(int i) const { return i < length() ? parts_[static_cast<size_t>(i)] : 0; }
  int multiplicity(int v) const;
  Partition conjugate() const;
  /// Removes one occurrence of v; throws if absent.
  Partition without_part(int v) const;

  /// Canonical order: by size, then lexicographically descending, so that
  /// partitions_of(n) is increasing.
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

  /// "[3,1,1]", "[]".
  std::string to_string() const;
  /// Accepts "[3, 1,1]", "3,1,1", "[]" and "" (empty).
  static Partition parse(const std::string& text);

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

/// A pair (outer, inner); containment of inner in outer is not required.
struct SkewPartition {
  Partition outer;
  Partition inner;
  int size() const { return outer.size() - inner.size(); }
  /// "[3,1]/[1]".
  std::string to_string() const;
  static SkewPartition parse(const std::string& text);
  friend bool operator==(const SkewPartition&, const SkewPartition&) = default;
};

struct PartitionStats {
  std::int64_t z = 1;
  int eps = 1;
  int n_lambda = 0;
  int n_lambda_conj = 0;
  int length = 0;
  std::map<int, int> mult;
};

/// All partitions of n in canonical (reverse lexicographic) order: [n], [n-1,1], ...
std::vector<Partition> partitions_of(int n);
/// Number of partitions of n.
std::size_t partition_count(int n);

PartitionStats stats(const Partition& lambda);
/// z_lambda = prod i^{m_i} m_i!
std::int64_t zee(const Partition& lambda);
/// Sign of a permutation of cycle type lambda.
int epsilon(const Partition& lambda);
/// n(lambda) = sum (i-1) lambda_i
int n_of(const Partition& lambda);

/// True iff some sub-multiset of the parts sums to k.
bool refines(const Partition& lambda, int k);
bool is_hook(const Partition& lambda);
bool is_rectangular(const Partition& lambda);
/// Multiset union of parts.
Partition join(const Partition& a, const Partition& b);
/// mu_i <= lambda_i for all i.
bool contains(const Partition& mu, const Partition& lambda);
/// a >= b in dominance order (sizes must agree).
bool dominates(const Partition& a, const Partition& b);

/// Cells (row, column), 0-based, of the skew diagram; requires containment.
std::vector<std::pair<int, int>> skew_cells(const SkewPartition& shape);
/// Connected, nonempty and free of 2x2 blocks; false when inner is not contained.
bool is_ribbon(const SkewPartition& shape);
/// Occupied rows minus one; throws NotARibbon.
int ribbon_height(const SkewPartition& shape);
/// Some empty column has cells on both sides; throws ContainmentRequired.
bool column_separated(const SkewPartition& shape);

/// Arm a(s) = lambda_i - j and leg l(s) = lambda'_j - i of cell (i, j), 1-based.
int arm(const Partition& lambda, int i, int j);
int leg(const Partition& lambda, int i, int j);

}  // namespace symfun
