#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "kint/errors.hpp"
#include "kint/matrix.hpp"
#include "kint/partition.hpp"
#include "kint/rational.hpp"

namespace kint {

inline constexpr int kDefaultTableCap = 12;
inline constexpr int kHardTableCap = 16;

namespace detail {

// Kostka numbers K_{shape, content} for one fixed content, memoized over
// the intermediate shapes reached by peeling horizontal strips.
class KostkaCounter {
 public:
  explicit KostkaCounter(const Partition& content) : content_(content.parts()) {}

  Integer count(const Partition& shape) { return count(shape.parts(), content_.size()); }

 private:
  Integer count(const std::vector<int>& shape, std::size_t letters) {
    if (letters == 0) return shape.empty() ? Integer(1) : Integer(0);
    auto key = std::make_pair(shape, letters);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    // The largest letter occupies a horizontal strip of size content[letters-1]:
    // the inner shape nu satisfies shape[i+1] <= nu[i] <= shape[i].
    const int strip = content_[letters - 1];
    Integer total = 0;
    std::vector<int> inner(shape.size());
    std::function<void(std::size_t, int)> rec = [&](std::size_t row, int left) {
      if (row == shape.size()) {
        if (left != 0) return;
        std::vector<int> nu;
        for (int v : inner)
          if (v > 0) nu.push_back(v);
        total += count(nu, letters - 1);
        return;
      }
      const int lo = row + 1 < shape.size() ? shape[row + 1] : 0;
      for (int v = shape[row]; v >= lo; --v) {
        const int removed = shape[row] - v;
        if (removed > left) break;
        inner[row] = v;
        rec(row + 1, left - removed);
      }
    };
    rec(0, strip);
    memo_.emplace(std::move(key), total);
    return total;
  }

  std::vector<int> content_;
  std::map<std::pair<std::vector<int>, std::size_t>, Integer> memo_;
};

}  // namespace detail

/// Number of semistandard tableaux of the given shape and content.
inline Integer kostka_number(const Partition& shape, const Partition& content) {
  require_same_n(shape, content);
  return detail::KostkaCounter(content).count(shape);
}

/// Number of tabloids of the given shape fixed by a permutation of the
/// given cycle type, i.e. the permutation character of M^shape.
///
/// A tabloid is fixed iff every row is a union of whole cycles, so this
/// counts assignments of the (distinguishable) cycles to the (distinct) rows
/// that fill every row exactly. Cycles of equal length are distributed
/// together with a multinomial weight; states are memoized on the sorted
/// vector of remaining row capacities.
inline Integer perm_character(const Partition& shape, const Partition& cycle_type) {
  require_same_n(shape, cycle_type);
  std::vector<std::pair<int, int>> groups;  // (cycle length, multiplicity)
  for (int len : cycle_type.parts()) {
    if (!groups.empty() && groups.back().first == len)
      ++groups.back().second;
    else
      groups.emplace_back(len, 1);
  }
  std::map<std::pair<std::size_t, std::vector<int>>, Integer> memo;
  std::function<Integer(std::size_t, std::vector<int>)> go = [&](std::size_t g,
                                                                  std::vector<int> caps) -> Integer {
    std::sort(caps.begin(), caps.end(), std::greater<>());
    while (!caps.empty() && caps.back() == 0) caps.pop_back();
    if (g == groups.size()) return caps.empty() ? Integer(1) : Integer(0);
    auto key = std::make_pair(g, caps);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto [len, mult] = groups[g];
    Integer total = 0;
    std::vector<int> take(caps.size(), 0);
    std::function<void(std::size_t, int, Integer)> distribute = [&](std::size_t row, int left,
                                                                   Integer weight) {
      if (row == caps.size()) {
        if (left != 0) return;
        std::vector<int> next(caps);
        for (std::size_t r = 0; r < caps.size(); ++r) next[r] -= take[r] * len;
        total += weight * go(g + 1, std::move(next));
        return;
      }
      const int most = std::min(left, caps[row] / len);
      for (int c = 0; c <= most; ++c) {
        take[row] = c;
        // weight accumulates mult! / prod(c_r!) as a product of binomials
        distribute(row + 1, left - c,
                   weight * binomial(static_cast<unsigned>(left), static_cast<unsigned>(c)));
      }
      take[row] = 0;
    };
    distribute(0, mult, Integer(1));
    memo.emplace(std::move(key), total);
    return total;
  };
  return go(0, shape.parts());
}

/// Kostka matrix K[shape][content], indexed by partitions of n in
/// decreasing lexicographic order.
inline Matrix<Integer> kostka_matrix(int n) {
  const auto parts = enumerate_partitions(n);
  Matrix<Integer> k(parts.size(), parts.size());
  for (std::size_t c = 0; c < parts.size(); ++c) {
    detail::KostkaCounter counter(parts[c]);
    for (std::size_t r = 0; r < parts.size(); ++r) k(r, c) = counter.count(parts[r]);
  }
  return k;
}

/// D[shape][cycle type] = permutation character values.
inline Matrix<Integer> perm_character_matrix(int n) {
  const auto parts = enumerate_partitions(n);
  Matrix<Integer> d(parts.size(), parts.size());
  for (std::size_t r = 0; r < parts.size(); ++r)
    for (std::size_t c = 0; c < parts.size(); ++c) d(r, c) = perm_character(parts[r], parts[c]);
  return d;
}

/// Character table of S_n: entry (rep, class) = chi_rep(class), both axes
/// in decreasing lexicographic order.
class CharacterTable {
 public:
  CharacterTable(int n, std::vector<Partition> order, Matrix<Integer> entries)
      : n_(n), order_(std::move(order)), entries_(std::move(entries)) {
    for (std::size_t i = 0; i < order_.size(); ++i) index_.emplace(order_[i].to_string(), i);
  }

  int n() const { return n_; }
  std::size_t size() const { return order_.size(); }
  const std::vector<Partition>& order() const { return order_; }
  const Matrix<Integer>& entries() const { return entries_; }

  std::size_t index_of(const Partition& p) const {
    auto it = index_.find(p.to_string());
    require(p.n() == n_ && it != index_.end(), "partition " + p.to_string() + " is not a partition of " +
                                                   std::to_string(n_));
    return it->second;
  }

  const Integer& at(std::size_t rep, std::size_t cls) const { return entries_(rep, cls); }
  const Integer& value(const Partition& rep, const Partition& cls) const {
    return entries_(index_of(rep), index_of(cls));
  }

 private:
  int n_;
  std::vector<Partition> order_;
  Matrix<Integer> entries_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Solves K^t C = D by forward substitution. K is unit upper-triangular in
/// decreasing lexicographic order, so K^t is unit lower-triangular and the
/// solution is integral without any division.
inline CharacterTable character_table(int n, int cap = kDefaultTableCap) {
  require(n >= 1, "character_table: n must be at least 1");
  require(n <= cap && n <= kHardTableCap,
          "character_table: n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
  auto order = enumerate_partitions(n);
  const Matrix<Integer> k = kostka_matrix(n);
  const Matrix<Integer> d = perm_character_matrix(n);
  const std::size_t m = order.size();
  Matrix<Integer> c(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    if (k(i, i) != 1) throw std::logic_error("Kostka diagonal entry is not 1");
    for (std::size_t col = 0; col < m; ++col) {
      Integer v = d(i, col);
      for (std::size_t j = 0; j < i; ++j)
        if (k(j, i) != 0) v -= k(j, i) * c(j, col);
      c(i, col) = std::move(v);
    }
  }
  return CharacterTable(n, std::move(order), std::move(c));
}

/// Process-wide memo of character tables; construction is the dominant cost
/// of most pipelines. Thread-safe.
inline std::shared_ptr<const CharacterTable> shared_character_table(int n) {
  static std::mutex mu;
  static std::map<int, std::shared_ptr<const CharacterTable>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_shared<const CharacterTable>(character_table(n, kHardTableCap));
  return slot;
}

struct CharacterMinor {
  std::vector<Partition> rows;
  std::vector<Partition> cols;
  Matrix<Integer> entries;
  Integer det;
};

/// Top-left minor of the character table over partitions > (n-k, 1^k),
/// certified invertible by an exact determinant.
inline CharacterMinor minor_tilde(const CharacterTable& table, int k) {
  const int n = table.n();
  require(k >= 1 && n > 2 * k, "minor_tilde: requires n > 2k");
  auto fat = fat_list(n, k);
  fat.pop_back();  // drop (n-k, 1^k)
  CharacterMinor m{fat, fat, Matrix<Integer>(fat.size(), fat.size()), 0};
  for (std::size_t i = 0; i < fat.size(); ++i)
    for (std::size_t j = 0; j < fat.size(); ++j) m.entries(i, j) = table.value(fat[i], fat[j]);
  m.det = determinant(m.entries);
  if (m.det == 0)
    throw TheoremViolation("top-left character minor is singular at n=" + std::to_string(n) +
                           ", k=" + std::to_string(k));
  return m;
}

enum class SplitChoice { keep, split };

/// Minor with row phi_i and column either phi_i or split(phi_i); it must
/// coincide with minor_tilde.
inline CharacterMinor minor_breve(const CharacterTable& table, int k,
                                  const std::vector<SplitChoice>& choices) {
  const int n = table.n();
  require(k >= 1 && n > 3 * k + 1, "minor_breve: requires n > 3k+1");
  CharacterMinor tilde = minor_tilde(table, k);
  require(choices.size() == tilde.rows.size(),
          "minor_breve: expected " + std::to_string(tilde.rows.size()) + " choices");
  CharacterMinor m{tilde.rows, {}, Matrix<Integer>(tilde.rows.size(), tilde.rows.size()), 0};
  for (std::size_t j = 0; j < choices.size(); ++j)
    m.cols.push_back(choices[j] == SplitChoice::keep ? tilde.rows[j] : split(tilde.rows[j], k));
  for (std::size_t i = 0; i < m.rows.size(); ++i)
    for (std::size_t j = 0; j < m.cols.size(); ++j) m.entries(i, j) = table.value(m.rows[i], m.cols[j]);
  m.det = determinant(m.entries);
  if (!(m.entries == tilde.entries))
    throw TheoremViolation("split-column character minor differs from the top-left minor at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  return m;
}

}  // namespace kint
