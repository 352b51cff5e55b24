#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symfun/partition.hpp"

namespace symfun {

/// Filling of the rows of `shape` by horizontal dominoes; rows[i] lists the
/// domino lengths of row i from left to right.
struct DominoTabloid {
  Partition shape;
  std::vector<std::vector<int>> rows;

  /// Product over nonempty rows of the leftmost domino length.
  std::int64_t weight() const;
  /// "[2] [1,1] weight=2"
  std::string to_string() const;
};

/// Every domino tabloid of the given shape and type, each exactly once.
/// Throws SizeMismatch unless |shape| = |type|.
std::vector<DominoTabloid> enumerate_tabloids(const Partition& shape, const Partition& type);

/// w_{shape,type}: total weight of all domino tabloids, without materialising them.
/// Empty shape and type give 1.
std::int64_t tabloid_weight(const Partition& shape, const Partition& type);

}  // namespace symfun
