#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "kint/characters.hpp"
#include "kint/errors.hpp"
#include "kint/matrix.hpp"
#include "kint/partition.hpp"
#include "kint/permutation.hpp"
#include "kint/rational.hpp"

namespace kint {

inline constexpr int kGroupAlgebraCap = 7;
inline constexpr int kSpanRankCap = 6;

/// A rational-valued function on S_n, stored densely by Lehmer rank
/// (rank 0 is the identity).
struct GroupFunction {
  int n = 0;
  std::vector<Rational> values;

  static GroupFunction zero(int n) {
    require(n >= 1 && n <= kGroupAlgebraCap, "group functions are capped at n <= 7");
    return {n, std::vector<Rational>(to_i64(factorial(static_cast<unsigned>(n))), Rational(0))};
  }
  static GroupFunction constant(int n, const Rational& c) {
    auto f = zero(n);
    for (auto& v : f.values) v = c;
    return f;
  }

  void validate() const {
    require(n >= 1 && n <= kGroupAlgebraCap, "group functions are capped at n <= 7");
    require(static_cast<std::int64_t>(values.size()) == to_i64(factorial(static_cast<unsigned>(n))),
            "group function on S_" + std::to_string(n) + " needs n! values");
  }

  const Rational& at(const Permutation& p) const { return values[p.rank()]; }
  Rational& at(const Permutation& p) { return values[p.rank()]; }

  friend bool operator==(const GroupFunction&, const GroupFunction&) = default;
  friend GroupFunction operator+(GroupFunction a, const GroupFunction& b) {
    require(a.n == b.n, "group function sum: size mismatch");
    for (std::size_t i = 0; i < a.values.size(); ++i) a.values[i] += b.values[i];
    return a;
  }
  friend GroupFunction operator*(const Rational& c, GroupFunction a) {
    for (auto& v : a.values) v *= c;
    return a;
  }
};

/// The k-coset {sigma : sigma(sources[i]) = targets[i] for all i}, 0-based.
struct CosetLabel {
  std::vector<int> sources;
  std::vector<int> targets;

  void validate(int n) const {
    require(sources.size() == targets.size(), "coset label: tuples differ in length");
    require(static_cast<int>(sources.size()) < n, "coset label: requires k <= n-1");
    for (const auto* t : {&sources, &targets}) {
      std::vector<bool> seen(static_cast<std::size_t>(n), false);
      for (int v : *t) {
        require(v >= 0 && v < n, "coset label: entry out of range");
        require(!seen[v], "coset label: repeated entry");
        seen[v] = true;
      }
    }
  }

  bool contains(const Permutation& p) const {
    for (std::size_t i = 0; i < sources.size(); ++i)
      if (p(sources[i]) != targets[i]) return false;
    return true;
  }

  std::string to_string() const {
    std::string s = "T{";
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(sources[i] + 1) + "->" + std::to_string(targets[i] + 1);
    }
    return s + "}";
  }

  friend auto operator<=>(const CosetLabel&, const CosetLabel&) = default;
};

namespace detail {

// Per-n tables shared by all group-algebra routines.
struct GroupContext {
  int n;
  std::vector<Permutation> perms;
  std::vector<std::uint64_t> inverse_rank;
  std::vector<Partition> cycle_type;

  std::vector<Partition> classes;
  std::vector<std::uint32_t> class_index;
  std::vector<std::uint32_t> mult;  // full table for n <= 6

  explicit GroupContext(int n_) : n(n_), perms(all_permutations(n_)), classes(enumerate_partitions(n_)) {
    std::map<Partition, std::uint32_t> where;
    for (std::uint32_t i = 0; i < classes.size(); ++i) where.emplace(classes[i], i);
    for (const auto& p : perms) {
      inverse_rank.push_back(p.inverse().rank());
      cycle_type.push_back(p.cycle_type());
      class_index.push_back(where.at(cycle_type.back()));
    }
    if (n <= 6) {
      const std::size_t m = perms.size();
      mult.resize(m * m);
      for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b) mult[a * m + b] = static_cast<std::uint32_t>((perms[a] * perms[b]).rank());
    }
  }

  std::uint64_t product_rank(std::uint64_t a, std::uint64_t b) const {
    return mult.empty() ? (perms[a] * perms[b]).rank() : mult[a * perms.size() + b];
  }
};

inline const GroupContext& group_context(int n) {
  require(n >= 1 && n <= kGroupAlgebraCap, "group-algebra routines are capped at n <= 7");
  static std::mutex mu;
  static std::map<int, std::unique_ptr<GroupContext>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[n];
  if (!slot) slot = std::make_unique<GroupContext>(n);
  return *slot;
}

}  // namespace detail

/// (f*g)(t) = (1/n!) sum_s f(t s^{-1}) g(s).
inline GroupFunction convolve(const GroupFunction& f, const GroupFunction& g) {
  f.validate();
  g.validate();
  require(f.n == g.n, "convolve: size mismatch");
  const auto& ctx = detail::group_context(f.n);
  auto out = GroupFunction::zero(f.n);
  const Rational scale = ratio(1, factorial(static_cast<unsigned>(f.n)));
  for (std::size_t s = 0; s < g.values.size(); ++s) {
    if (g.values[s] == 0) continue;
    const std::uint64_t sinv = ctx.inverse_rank[s];
    const Rational w = g.values[s] * scale;
    for (std::size_t t = 0; t < out.values.size(); ++t) {
      const auto& fv = f.values[ctx.product_rank(t, sinv)];
      if (fv != 0) out.values[t] += fv * w;
    }
  }
  return out;
}

/// chi_lambda as a function on S_n.
inline GroupFunction character_function(const Partition& lambda, const CharacterTable& table) {
  const auto& ctx = detail::group_context(table.n());
  auto f = GroupFunction::zero(table.n());
  const std::size_t row = table.index_of(lambda);
  for (std::size_t i = 0; i < f.values.size(); ++i) f.values[i] = table.at(row, table.index_of(ctx.cycle_type[i]));
  return f;
}

namespace detail {

// sums[t][c] = sum of f(s) over s with t s^{-1} in class c. Every isotypic
// projection of f is an integer combination of these.
inline std::vector<std::vector<Rational>> class_sums(const GroupFunction& f) {
  const auto& ctx = group_context(f.n);
  std::vector<std::vector<Rational>> sums(ctx.perms.size(), std::vector<Rational>(ctx.classes.size(), Rational(0)));
  for (std::size_t s = 0; s < f.values.size(); ++s) {
    if (f.values[s] == 0) continue;
    const std::uint64_t sinv = ctx.inverse_rank[s];
    for (std::size_t t = 0; t < sums.size(); ++t) sums[t][ctx.class_index[ctx.product_rank(t, sinv)]] += f.values[s];
  }
  return sums;
}

inline GroupFunction project_from_sums(const std::vector<std::vector<Rational>>& sums, int n, const Partition& lambda,
                                       const CharacterTable& table) {
  const auto& ctx = group_context(n);
  const std::size_t row = table.index_of(lambda);
  std::vector<Integer> chi;
  for (const auto& c : ctx.classes) chi.push_back(table.at(row, table.index_of(c)));
  const Rational scale = ratio(dim_irrep(lambda), factorial(static_cast<unsigned>(n)));
  auto out = GroupFunction::zero(n);
  for (std::size_t t = 0; t < sums.size(); ++t) {
    Rational v = 0;
    for (std::size_t c = 0; c < chi.size(); ++c)
      if (chi[c] != 0 && sums[t][c] != 0) v += chi[c] * sums[t][c];
    out.values[t] = v * scale;
  }
  return out;
}

}  // namespace detail

/// Isotypic projection P_lambda f = dim(lambda) (chi_lambda * f).
inline GroupFunction isotypic_project(const GroupFunction& f, const Partition& lambda, const CharacterTable& table) {
  f.validate();
  require(f.n == table.n() && lambda.n() == f.n, "isotypic_project: size mismatch");
  return detail::project_from_sums(detail::class_sums(f), f.n, lambda, table);
}

/// All isotypic projections of f, in the table's order.
inline std::vector<GroupFunction> isotypic_decomposition(const GroupFunction& f, const CharacterTable& table) {
  f.validate();
  require(f.n == table.n(), "isotypic_decomposition: size mismatch");
  const auto sums = detail::class_sums(f);
  std::vector<GroupFunction> out;
  for (const auto& lambda : table.order()) out.push_back(detail::project_from_sums(sums, f.n, lambda, table));
  return out;
}

inline bool is_zero(const GroupFunction& f) {
  for (const auto& v : f.values)
    if (v != 0) return false;
  return true;
}

/// Partitions whose isotypic projection of f is nonzero, in decreasing lex order.
/// Projections are orthogonal, so P f = 0 iff <f, P f> = 0, and that inner
/// product only needs class sums at points of the support of f.
inline std::vector<Partition> fourier_support(const GroupFunction& f, const CharacterTable& table) {
  f.validate();
  require(f.n == table.n(), "fourier_support: size mismatch");
  const auto& ctx = detail::group_context(f.n);
  std::vector<std::size_t> live;
  for (std::size_t s = 0; s < f.values.size(); ++s)
    if (f.values[s] != 0) live.push_back(s);
  // weighted[c] = sum over live t of f(t) * (sum of f(s) with t s^{-1} in class c)
  std::vector<Rational> weighted(ctx.classes.size(), Rational(0));
  for (std::size_t t : live)
    for (std::size_t s : live)
      weighted[ctx.class_index[ctx.product_rank(t, ctx.inverse_rank[s])]] += f.values[t] * f.values[s];
  std::vector<Partition> out;
  for (const auto& lambda : table.order()) {
    const std::size_t row = table.index_of(lambda);
    Rational v = 0;
    for (std::size_t c = 0; c < ctx.classes.size(); ++c)
      if (weighted[c] != 0) v += table.at(row, table.index_of(ctx.classes[c])) * weighted[c];
    if (v != 0) out.push_back(lambda);
  }
  return out;
}

inline GroupFunction coset_indicator(const CosetLabel& label, int n) {
  label.validate(n);
  const auto& ctx = detail::group_context(n);
  auto f = GroupFunction::zero(n);
  for (std::size_t i = 0; i < ctx.perms.size(); ++i)
    if (label.contains(ctx.perms[i])) f.values[i] = 1;
  return f;
}

/// Whether every partition in the Fourier support dominates (n-k, 1^k).
inline bool is_in_vk(const GroupFunction& f, int k, const CharacterTable& table) {
  require(k >= 0 && k < f.n, "is_in_vk: requires 0 <= k < n");
  const Partition hook = hook_partition(f.n, k);
  for (const auto& lambda : fourier_support(f, table))
    if (!dominates(lambda, hook)) return false;
  return true;
}

/// g(sigma) = f(left sigma right).
inline GroupFunction double_translate(const GroupFunction& f, const Permutation& left, const Permutation& right) {
  f.validate();
  require(left.n() == f.n && right.n() == f.n, "double_translate: size mismatch");
  const auto& ctx = detail::group_context(f.n);
  auto g = GroupFunction::zero(f.n);
  for (std::size_t i = 0; i < ctx.perms.size(); ++i) g.values[i] = f.values[(left * ctx.perms[i] * right).rank()];
  return g;
}

/// Standard inner product sum_sigma f(sigma) g(sigma).
inline Rational inner(const GroupFunction& f, const GroupFunction& g) {
  require(f.n == g.n, "inner: size mismatch");
  Rational s = 0;
  for (std::size_t i = 0; i < f.values.size(); ++i)
    if (f.values[i] != 0 && g.values[i] != 0) s += f.values[i] * g.values[i];
  return s;
}

/// Sum of dim^2 over the partitions dominating (n-k, 1^k).
inline Integer vk_dimension(int n, int k) {
  const Partition hook = hook_partition(n, k);
  Integer d = 0;
  for (const auto& lambda : enumerate_partitions(n))
    if (dominates(lambda, hook)) {
      const Integer di = dim_irrep(lambda);
      d += di * di;
    }
  return d;
}

namespace detail {

inline constexpr std::uint64_t kRankPrime = 2147483647ULL;

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  for (b %= p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Rank over GF(p) of 0/1 rows, by incremental elimination against an
// echelon basis keyed by pivot column.
inline std::size_t rank_mod_p(const std::vector<std::vector<std::uint64_t>>& rows, std::size_t width) {
  const std::uint64_t p = kRankPrime;
  std::vector<std::vector<std::uint64_t>> basis(width);
  std::size_t r = 0;
  for (auto v : rows) {
    for (std::size_t c = 0; c < width; ++c) {
      if (v[c] == 0) continue;
      if (basis[c].empty()) {
        const std::uint64_t inv = pow_mod(v[c], p - 2, p);
        for (auto& x : v) x = x * inv % p;
        basis[c] = std::move(v);
        ++r;
        break;
      }
      const std::uint64_t f = v[c];
      for (std::size_t j = c; j < width; ++j)
        if (basis[c][j]) v[j] = (v[j] + (p - f) * basis[c][j]) % p;
    }
  }
  return r;
}

}  // namespace detail

struct SpanRankReport {
  int n = 0;
  int k = 0;
  std::size_t cosets = 0;
  std::size_t rank = 0;
  Integer expected;  // sum of dim^2 over partitions dominating (n-k, 1^k)
  /// true: rank over Q by exact elimination; false: rank over GF(2^31-1),
  /// which is a lower bound for the rank over Q
  bool exact = false;
  bool matches() const { return Integer(static_cast<unsigned long>(rank)) == expected; }
};

/// Rank of the span of all k-coset indicators. Exact rational elimination
/// for n <= 5; modular elimination at n = 6.
inline SpanRankReport coset_span_rank(int n, int k) {
  require(n >= 2 && n <= kSpanRankCap, "coset_span_rank: requires 2 <= n <= 6");
  require(k >= 1 && k < n, "coset_span_rank: requires 1 <= k < n");
  const auto& ctx = detail::group_context(n);
  const auto tuples = ordered_tuples(n, k);
  SpanRankReport rep{n, k, tuples.size() * tuples.size(), 0, vk_dimension(n, k), n <= 5};
  const std::size_t width = ctx.perms.size();
  if (rep.exact) {
    Matrix<Rational> m(rep.cosets, width);
    std::size_t r = 0;
    for (const auto& a : tuples)
      for (const auto& b : tuples) {
        const CosetLabel label{a, b};
        for (std::size_t i = 0; i < width; ++i)
          if (label.contains(ctx.perms[i])) m(r, i) = 1;
        ++r;
      }
    rep.rank = rank(std::move(m));
  } else {
    std::vector<std::vector<std::uint64_t>> rows;
    rows.reserve(rep.cosets);
    for (const auto& a : tuples)
      for (const auto& b : tuples) {
        const CosetLabel label{a, b};
        std::vector<std::uint64_t> v(width, 0);
        for (std::size_t i = 0; i < width; ++i)
          if (label.contains(ctx.perms[i])) v[i] = 1;
        rows.push_back(std::move(v));
      }
    rep.rank = detail::rank_mod_p(rows, width);
  }
  return rep;
}

}  // namespace kint
