#include "symfun/partition.hpp"

#include <algorithm>
#include <bitset>
#include <cctype>
#include <numeric>
#include <set>

#include "symfun/errors.hpp"

namespace symfun {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw Error("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int v, int count) {
  return Partition(std::vector<int>(static_cast<size_t>(count), v));
}

int Partition::multiplicity(int v) const { return static_cast<int>(std::count(parts_.begin(), parts_.end(), v)); }

Partition Partition::conjugate() const {
  std::vector<int> c(static_cast<size_t>(part(0)), 0);
  for (int p : parts_)
    for (int j = 0; j < p; ++j) ++c[static_cast<size_t>(j)];
  return Partition(std::move(c));
}

Partition Partition::without_part(int v) const {
  auto it = std::find(parts_.begin(), parts_.end(), v);
  if (it == parts_.end()) throw Error("part " + std::to_string(v) + " not present in " + to_string());
  std::vector<int> p = parts_;
  p.erase(p.begin() + (it - parts_.begin()));
  return Partition(std::move(p));
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (a.size_ != b.size_) return a.size_ <=> b.size_;
  // lexicographically larger comes first
  return std::lexicographical_compare_three_way(b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
}

std::string Partition::to_string() const {
  std::string s = "[";
  for (size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
  return s + "]";
}

Partition Partition::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated partition: '" + text + "'");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<int> parts;
  size_t pos = 0;
  while (pos < s.size()) {
    size_t comma = s.find(',', pos);
    std::string tok = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      throw ParseError("bad partition: '" + text + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
    if (pos == s.size()) throw ParseError("bad partition: '" + text + "'");
  }
  try {
    return Partition(std::move(parts));
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError("bad partition '" + text + "': " + e.what());
  }
}

std::string SkewPartition::to_string() const { return outer.to_string() + "/" + inner.to_string(); }

SkewPartition SkewPartition::parse(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return {Partition::parse(text), Partition()};
  return {Partition::parse(text.substr(0, slash)), Partition::parse(text.substr(slash + 1))};
}

namespace {

void generate(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int k = std::min(remaining, max_part); k >= 1; --k) {
    cur.push_back(k);
    generate(remaining - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) return {};
  std::vector<Partition> out;
  std::vector<int> cur;
  generate(n, n, cur, out);
  return out;
}

std::size_t partition_count(int n) {
  if (n < 0) return 0;
  // p(n) via counting partitions by largest part
  std::vector<std::size_t> p(static_cast<size_t>(n) + 1, 0);
  p[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = k; i <= n; ++i) p[static_cast<size_t>(i)] += p[static_cast<size_t>(i - k)];
  return p[static_cast<size_t>(n)];
}

std::int64_t zee(const Partition& lambda) {
  std::int64_t z = 1;
  const auto& parts = lambda.parts();
  size_t i = 0;
  while (i < parts.size()) {
    size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (size_t r = 1; r <= j - i; ++r) z *= static_cast<std::int64_t>(parts[i]) * static_cast<std::int64_t>(r);
    i = j;
  }
  return z;
}

int epsilon(const Partition& lambda) { return (lambda.size() - lambda.length()) % 2 == 0 ? 1 : -1; }

int n_of(const Partition& lambda) {
  int s = 0;
  for (int i = 0; i < lambda.length(); ++i) s += i * lambda.part(i);
  return s;
}

PartitionStats stats(const Partition& lambda) {
  PartitionStats st;
  st.z = zee(lambda);
  st.eps = epsilon(lambda);
  st.n_lambda = n_of(lambda);
  st.n_lambda_conj = n_of(lambda.conjugate());
  st.length = lambda.length();
  for (int p : lambda.parts()) ++st.mult[p];
  return st;
}

bool refines(const Partition& lambda, int k) {
  if (k < 0) return false;
  if (k == 0) return true;
  if (k > lambda.size()) return false;
  // subset-sum over the multiset: reachable sums as a bitset, bounded multiplicities
  std::vector<char> reach(static_cast<size_t>(k) + 1, 0);
  reach[0] = 1;
  for (int p : lambda.parts())
    for (int s = k; s >= p; --s)
      if (reach[static_cast<size_t>(s - p)]) reach[static_cast<size_t>(s)] = 1;
  return reach[static_cast<size_t>(k)] != 0;
}

bool is_hook(const Partition& lambda) { return lambda.part(1) <= 1; }

bool is_rectangular(const Partition& lambda) {
  return !lambda.empty() && lambda.part(0) == lambda.parts().back();
}

Partition join(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  return Partition::from_unsorted(std::move(parts));
}

bool contains(const Partition& mu, const Partition& lambda) {
  if (mu.length() > lambda.length()) return false;
  for (int i = 0; i < mu.length(); ++i)
    if (mu.part(i) > lambda.part(i)) return false;
  return true;
}

bool dominates(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) throw SizeMismatch("dominance compares partitions of equal size");
  int sa = 0, sb = 0;
  for (int i = 0; i < std::max(a.length(), b.length()); ++i) {
    sa += a.part(i);
    sb += b.part(i);
    if (sa < sb) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> skew_cells(const SkewPartition& shape) {
  if (!contains(shape.inner, shape.outer))
    throw ContainmentRequired(shape.to_string() + ": inner shape not contained in outer shape");
  std::vector<std::pair<int, int>> cells;
  for (int i = 0; i < shape.outer.length(); ++i)
    for (int j = shape.inner.part(i); j < shape.outer.part(i); ++j) cells.emplace_back(i, j);
  return cells;
}

bool is_ribbon(const SkewPartition& shape) {
  if (!contains(shape.inner, shape.outer)) return false;
  auto cells = skew_cells(shape);
  if (cells.empty()) return false;
  std::set<std::pair<int, int>> cellset(cells.begin(), cells.end());
  for (auto [i, j] : cells)
    if (cellset.count({i + 1, j}) && cellset.count({i, j + 1}) && cellset.count({i + 1, j + 1})) return false;
  // connectivity by flood fill
  std::set<std::pair<int, int>> seen{cells.front()};
  std::vector<std::pair<int, int>> stack{cells.front()};
  while (!stack.empty()) {
    auto [i, j] = stack.back();
    stack.pop_back();
    for (auto nb : {std::pair{i + 1, j}, std::pair{i - 1, j}, std::pair{i, j + 1}, std::pair{i, j - 1}})
      if (cellset.count(nb) && seen.insert(nb).second) stack.push_back(nb);
  }
  return seen.size() == cells.size();
}

int ribbon_height(const SkewPartition& shape) {
  if (!is_ribbon(shape)) throw NotARibbon(shape.to_string() + " is not a ribbon");
  std::set<int> rows;
  for (auto [i, j] : skew_cells(shape)) rows.insert(i);
  return static_cast<int>(rows.size()) - 1;
}

bool column_separated(const SkewPartition& shape) {
  auto cells = skew_cells(shape);
  std::set<int> cols;
  for (auto [i, j] : cells) cols.insert(j);
  if (cols.empty()) return false;
  for (int j = *cols.begin(); j <= *cols.rbegin(); ++j)
    if (!cols.count(j)) return true;
  return false;
}

int arm(const Partition& lambda, int i, int j) { return lambda.part(i - 1) - j; }
int leg(const Partition& lambda, int i, int j) { return lambda.conjugate().part(j - 1) - i; }

}  // namespace symfun
