#include "symfun/transition.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <tuple>

#include "symfun/errors.hpp"

namespace symfun {

char basis_letter(Basis b) {
  switch (b) {
    case Basis::m: return 'm';
    case Basis::h: return 'h';
    case Basis::e: return 'e';
    case Basis::p: return 'p';
    case Basis::s: return 's';
    case Basis::f: return 'f';
  }
  return '?';
}

Basis basis_from_letter(char c) {
  switch (c) {
    case 'm': return Basis::m;
    case 'h': return Basis::h;
    case 'e': return Basis::e;
    case 'p': return Basis::p;
    case 's': return Basis::s;
    case 'f': return Basis::f;
    default: throw ParseError(std::string("unknown basis '") + c + "'");
  }
}

std::size_t partition_index(const Partition& lambda) {
  static std::mutex mu;
  static std::map<int, std::map<Partition, std::size_t>> cache;
  std::lock_guard lock(mu);
  auto& idx = cache[lambda.size()];
  if (idx.empty()) {
    auto parts = partitions_of(lambda.size());
    for (std::size_t i = 0; i < parts.size(); ++i) idx.emplace(parts[i], i);
  }
  return idx.at(lambda);
}

namespace {

// Counts ways to place the parts of lambda (in order) into bins with capacities.
struct AssignmentCounter {
  const std::vector<int>& parts;
  std::map<std::pair<size_t, std::vector<int>>, Integer> memo;

  Integer count(size_t i, std::vector<int>& cap) {
    if (i == parts.size()) {
      for (int c : cap)
        if (c) return 0;
      return 1;
    }
    auto key = std::make_pair(i, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    for (auto& c : cap) {
      if (c < parts[i]) continue;
      c -= parts[i];
      total += count(i + 1, cap);
      c += parts[i];
    }
    memo.emplace(std::move(key), total);
    return total;
  }
};

// Matrices with prescribed row sums (rows) and column sums (cap); entries bounded by max_entry.
struct MatrixCounter {
  const std::vector<int>& rows;
  int max_entry;
  std::map<std::pair<size_t, std::vector<int>>, Integer> memo;

  Integer count(size_t i, std::vector<int>& cap) {
    if (i == rows.size()) {
      for (int c : cap)
        if (c) return 0;
      return 1;
    }
    auto key = std::make_pair(i, cap);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer total = 0;
    fill(i, 0, rows[i], cap, total);
    memo.emplace(std::move(key), total);
    return total;
  }

  void fill(size_t i, size_t col, int left, std::vector<int>& cap, Integer& total) {
    if (col == cap.size()) {
      if (left == 0) total += count(i + 1, cap);
      return;
    }
    for (int v = 0; v <= std::min({left, cap[col], max_entry}); ++v) {
      cap[col] -= v;
      fill(i, col + 1, left - v, cap, total);
      cap[col] += v;
    }
  }
};

}  // namespace

Integer power_sum_monomial_coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  AssignmentCounter c{lambda.parts(), {}};
  std::vector<int> cap = mu.parts();
  return c.count(0, cap);
}

Integer complete_monomial_coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  MatrixCounter c{lambda.parts(), lambda.size(), {}};
  std::vector<int> cap = mu.parts();
  return c.count(0, cap);
}

Integer elementary_monomial_coefficient(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  MatrixCounter c{lambda.parts(), 1, {}};
  std::vector<int> cap = mu.parts();
  return c.count(0, cap);
}

std::vector<std::pair<Partition, Integer>> jacobi_trudi(const Partition& lambda) {
  // det(h_{lambda_i - i + j}) expanded over permutations, pruning h_{<0} = 0
  const int l = lambda.length();
  std::map<Partition, Integer> acc;
  std::vector<int> chosen;
  std::vector<bool> used(static_cast<size_t>(l), false);
  auto rec = [&](auto&& self, int row, int sign) -> void {
    if (row == l) {
      acc[Partition::from_unsorted(chosen)] += sign;
      return;
    }
    int inversions = 0;
    for (int j = l - 1; j >= 0; --j) {
      if (used[static_cast<size_t>(j)]) {
        ++inversions;
        continue;
      }
      int idx = lambda.part(row) - row + j;
      if (idx < 0) continue;
      used[static_cast<size_t>(j)] = true;
      chosen.push_back(idx);
      self(self, row + 1, inversions % 2 ? -sign : sign);
      chosen.pop_back();
      used[static_cast<size_t>(j)] = false;
    }
  };
  rec(rec, 0, 1);
  std::vector<std::pair<Partition, Integer>> out;
  for (auto& [p, c] : acc)
    if (c != 0) out.emplace_back(p, c);
  return out;
}

namespace {

using Key = std::tuple<int, int, int>;

std::mutex cache_mu;
std::map<Key, std::shared_ptr<const Matrix<Rational>>> to_m_cache;
std::map<Key, std::shared_ptr<const TransitionMatrix>> transition_cache;

template <class Map, class Fn>
auto cached(Map& cache, const Key& key, Fn&& build) {
  {
    std::lock_guard lock(cache_mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = build();
  std::lock_guard lock(cache_mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

std::shared_ptr<const Matrix<Rational>> to_monomial(Basis b, int d);

Matrix<Rational> counting_matrix(int d, Integer (*coef)(const Partition&, const Partition&)) {
  auto idx = partitions_of(d);
  Matrix<Rational> m(idx.size(), std::vector<Rational>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = 0; j < idx.size(); ++j) m[i][j] = Rational(coef(idx[i], idx[j]));
  return m;
}

Matrix<Rational> build_to_monomial(Basis b, int d) {
  auto idx = partitions_of(d);
  const size_t n = idx.size();
  switch (b) {
    case Basis::m: return identity_matrix<Rational>(n);
    case Basis::p: return counting_matrix(d, power_sum_monomial_coefficient);
    case Basis::h: return counting_matrix(d, complete_monomial_coefficient);
    case Basis::e: return counting_matrix(d, elementary_monomial_coefficient);
    case Basis::s: {
      Matrix<Rational> sh(n, std::vector<Rational>(n));
      for (size_t i = 0; i < n; ++i)
        for (auto& [p, c] : jacobi_trudi(idx[i])) sh[i][partition_index(p)] = Rational(c);
      return matmul(sh, *to_monomial(Basis::h, d));
    }
    case Basis::f: {
      // f = omega(m); omega acts on p_rho by the sign eps_rho
      const auto& pm = *to_monomial(Basis::p, d);
      Matrix<Rational> mp = inverse(pm);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) mp[i][j] *= epsilon(idx[j]);
      return matmul(mp, pm);
    }
  }
  throw Error("unknown basis");
}

std::shared_ptr<const Matrix<Rational>> to_monomial(Basis b, int d) {
  return cached(to_m_cache, Key{static_cast<int>(b), static_cast<int>(Basis::m), d},
                [&] { return std::make_shared<const Matrix<Rational>>(build_to_monomial(b, d)); });
}

}  // namespace

const TransitionMatrix& transition(Basis from, Basis to, int degree) {
  if (degree < 0) throw Error("negative degree");
  auto ptr = cached(transition_cache, Key{static_cast<int>(from), static_cast<int>(to), degree}, [&] {
    TransitionMatrix t{from, to, degree, partitions_of(degree), {}};
    if (from == to) {
      t.entries = identity_matrix<Rational>(t.index.size());
    } else {
      // X * to_m(to) = to_m(from): `from` expressed in `to`
      const auto& a = *to_monomial(from, degree);
      t.entries = to == Basis::m ? a : solve_right(*to_monomial(to, degree), a);
    }
    return std::make_shared<const TransitionMatrix>(std::move(t));
  });
  return *ptr;
}

}  // namespace symfun
