#include "symfun/tabloids.hpp"

#include <map>

#include "symfun/errors.hpp"

namespace symfun {

std::int64_t DominoTabloid::weight() const {
  std::int64_t w = 1;
  for (const auto& row : rows)
    if (!row.empty()) w *= row.front();
  return w;
}

std::string DominoTabloid::to_string() const {
  std::string s;
  for (const auto& row : rows) {
    s += "[";
    for (size_t i = 0; i < row.size(); ++i) s += (i ? "," : "") + std::to_string(row[i]);
    s += "] ";
  }
  return s + "weight=" + std::to_string(weight());
}

namespace {

void check_sizes(const Partition& shape, const Partition& type) {
  if (shape.size() != type.size())
    throw SizeMismatch("tabloid shape " + shape.to_string() + " and type " + type.to_string() + " differ in size");
}

// Remaining domino multiset as (length -> count), lengths descending.
using Multiset = std::map<int, int, std::greater<>>;

Multiset to_multiset(const Partition& p) {
  Multiset m;
  for (int v : p.parts()) ++m[v];
  return m;
}

// Ordered fillings of one row of length `len` from `pool`.
void row_fillings(int len, Multiset& pool, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (len == 0) {
    out.push_back(cur);
    return;
  }
  for (auto& [v, cnt] : pool) {
    if (cnt == 0 || v > len) continue;
    --cnt;
    cur.push_back(v);
    row_fillings(len - v, pool, cur, out);
    cur.pop_back();
    ++cnt;
  }
}

void enumerate_rows(const Partition& shape, int row, Multiset& pool, std::vector<std::vector<int>>& rows,
                    std::vector<DominoTabloid>& out) {
  if (row == shape.length()) {
    out.push_back({shape, rows});
    return;
  }
  std::vector<std::vector<int>> fills;
  std::vector<int> cur;
  row_fillings(shape.part(row), pool, cur, fills);
  for (const auto& f : fills) {
    for (int v : f) --pool[v];
    rows.push_back(f);
    enumerate_rows(shape, row + 1, pool, rows, out);
    rows.pop_back();
    for (int v : f) ++pool[v];
  }
}

std::int64_t factorial(int n) {
  std::int64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Distinct arrangements of a multiset.
std::int64_t arrangements(const std::vector<std::pair<int, int>>& sub) {
  int total = 0;
  std::int64_t denom = 1;
  for (auto [v, c] : sub) {
    total += c;
    denom *= factorial(c);
  }
  return factorial(total) / denom;
}

// Sum over distinct orderings of `sub` of the first element.
std::int64_t leading_weight_sum(std::vector<std::pair<int, int>> sub) {
  std::int64_t s = 0;
  for (auto& [v, c] : sub) {
    if (c == 0) continue;
    --c;
    s += static_cast<std::int64_t>(v) * arrangements(sub);
    ++c;
  }
  return s;
}

struct WeightDp {
  const Partition& shape;
  std::map<std::pair<int, std::vector<int>>, std::int64_t> memo;
  std::vector<int> values;  // distinct lengths, descending

  std::int64_t solve(int row, std::vector<int>& counts) {
    if (row == shape.length()) {
      for (int c : counts)
        if (c) return 0;
      return 1;
    }
    auto key = std::make_pair(row, counts);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    std::int64_t total = 0;
    std::vector<int> take(counts.size(), 0);
    choose(row, 0, shape.part(row), counts, take, total);
    memo.emplace(std::move(key), total);
    return total;
  }

  // Chooses how many dominoes of each length go into `row`.
  void choose(int row, size_t idx, int left, std::vector<int>& counts, std::vector<int>& take, std::int64_t& total) {
    if (idx == values.size()) {
      if (left != 0) return;
      std::vector<std::pair<int, int>> sub;
      for (size_t i = 0; i < values.size(); ++i)
        if (take[i]) sub.emplace_back(values[i], take[i]);
      std::int64_t lead = sub.empty() ? 1 : leading_weight_sum(sub);
      for (size_t i = 0; i < values.size(); ++i) counts[i] -= take[i];
      total += lead * solve(row + 1, counts);
      for (size_t i = 0; i < values.size(); ++i) counts[i] += take[i];
      return;
    }
    for (int c = 0; c <= counts[idx] && c * values[idx] <= left; ++c) {
      take[idx] = c;
      choose(row, idx + 1, left - c * values[idx], counts, take, total);
    }
    take[idx] = 0;
  }
};

}  // namespace

std::vector<DominoTabloid> enumerate_tabloids(const Partition& shape, const Partition& type) {
  check_sizes(shape, type);
  Multiset pool = to_multiset(type);
  std::vector<std::vector<int>> rows;
  std::vector<DominoTabloid> out;
  enumerate_rows(shape, 0, pool, rows, out);
  return out;
}

std::int64_t tabloid_weight(const Partition& shape, const Partition& type) {
  check_sizes(shape, type);
  WeightDp dp{shape, {}, {}};
  std::vector<int> counts;
  for (auto [v, c] : to_multiset(type)) {
    dp.values.push_back(v);
    counts.push_back(c);
  }
  return dp.solve(0, counts);
}

}  // namespace symfun
