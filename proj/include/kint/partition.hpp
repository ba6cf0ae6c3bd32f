#pragma once

#include <algorithm>
#include <compare>
#include <numeric>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "kint/errors.hpp"
#include "kint/rational.hpp"

namespace kint {

/// A partition of n: a non-increasing sequence of positive integers.
///
/// The same value labels a cycle type (conjugacy class) and an irreducible
/// representation of S_n. Canonical form is enforced at construction, so two
/// partitions are equal iff their part sequences are equal. The empty
/// partition (n = 0) is allowed because recursive constructions bottom out
/// there; public operations that need n >= 1 check it themselves.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      require(parts_[i] > 0, "partition parts must be positive");
      require(i == 0 || parts_[i] <= parts_[i - 1], "partition parts must be non-increasing");
    }
    n_ = std::accumulate(parts_.begin(), parts_.end(), 0);
  }

  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  /// Parses "3+2+2"; surrounding whitespace is ignored.
  static Partition parse(std::string_view text) {
    std::vector<int> parts;
    std::string token;
    auto flush = [&] {
      require(!token.empty(), "malformed partition: '" + std::string(text) + "'");
      require(token.size() < 9, "partition part too large");
      parts.push_back(std::stoi(token));
      token.clear();
    };
    for (char c : text) {
      if (c == ' ') continue;
      if (c == '+') {
        flush();
      } else {
        require(c >= '0' && c <= '9', "malformed partition: '" + std::string(text) + "'");
        token.push_back(c);
      }
    }
    flush();
    return Partition(std::move(parts));
  }

  int n() const { return n_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return parts_[i]; }
  int first_row() const { return parts_.empty() ? 0 : parts_.front(); }
  int first_column() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  int multiplicity(int part) const {
    return static_cast<int>(std::count(parts_.begin(), parts_.end(), part));
  }

  /// Parity of the conjugacy class with this cycle type.
  bool is_even_class() const { return (n_ - static_cast<int>(parts_.size())) % 2 == 0; }

  std::string to_string() const {
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += '+';
      s += std::to_string(parts_[i]);
    }
    return s;
  }

  // Lexicographic on the part sequence; for partitions of the same n this
  // is the lexicographic order that refines dominance.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) = default;

  friend std::ostream& operator<<(std::ostream& os, const Partition& p) {
    return os << '(' << p.to_string() << ')';
  }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

namespace detail {

inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

}  // namespace detail

/// All partitions of n in strictly decreasing lexicographic order.
inline std::vector<Partition> enumerate_partitions(int n) {
  require(n >= 0, "enumerate_partitions: n must be non-negative");
  std::vector<Partition> out;
  std::vector<int> cur;
  detail::partitions_rec(n, n, cur, out);
  return out;
}

inline std::size_t partition_count(int n) {
  // p(n) by Euler's recurrence-free DP over part sizes.
  std::vector<std::size_t> p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

inline void require_same_n(const Partition& a, const Partition& b) {
  require(a.n() == b.n(), "partitions " + a.to_string() + " and " + b.to_string() +
                              " have different sizes");
}

/// Dominance: every prefix sum of a is at least the matching prefix sum of b.
inline bool dominates(const Partition& a, const Partition& b) {
  require_same_n(a, b);
  int sa = 0, sb = 0;
  std::size_t len = std::max(a.length(), b.length());
  for (std::size_t i = 0; i < len; ++i) {
    sa += i < a.length() ? a[i] : 0;
    sb += i < b.length() ? b[i] : 0;
    if (sa < sb) return false;
  }
  return true;
}

inline std::strong_ordering lex_compare(const Partition& a, const Partition& b) {
  require_same_n(a, b);
  return a <=> b;
}

inline Partition transpose(const Partition& p) {
  std::vector<int> t(static_cast<std::size_t>(p.first_row()), 0);
  for (int part : p.parts())
    for (int j = 0; j < part; ++j) ++t[j];
  return Partition(std::move(t));
}

/// (p1 - k - 1, k + 1, p2, ..., pr): flips class parity while keeping the
/// character values of every partition above the hook (n-k, 1^k).
inline Partition split(const Partition& p, int k) {
  const int n = p.n();
  require(k >= 1, "split: k must be positive");
  require(n > 3 * k + 1, "split: requires n > 3k+1");
  require(p.first_row() >= n - k, "split: first part must be at least n-k");
  std::vector<int> parts{p[0] - k - 1, k + 1};
  parts.insert(parts.end(), p.parts().begin() + 1, p.parts().end());
  return Partition(std::move(parts));
}

/// Hook length of every cell, row by row.
inline std::vector<std::vector<int>> hook_lengths(const Partition& p) {
  const Partition t = transpose(p);
  std::vector<std::vector<int>> h(p.length());
  for (std::size_t i = 0; i < p.length(); ++i) {
    h[i].resize(static_cast<std::size_t>(p[i]));
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = t[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
      h[i][j] = arm + leg + 1;
    }
  }
  return h;
}

inline Integer hook_product(const Partition& p) {
  Integer prod = 1;
  for (const auto& row : hook_lengths(p))
    for (int h : row) prod *= h;
  return prod;
}

/// Dimension of the irreducible representation, by the hook length formula.
inline Integer dim_irrep(const Partition& p) {
  const Integer num = factorial(static_cast<unsigned>(p.n()));
  const Integer den = hook_product(p);
  if (num % den != 0) throw std::logic_error("hook product does not divide n!");
  return num / den;
}

/// (n-k, 1^k), the smallest fat partition.
inline Partition hook_partition(int n, int k) {
  require(k >= 0 && n - k >= 1, "hook_partition: requires 0 <= k < n");
  std::vector<int> parts{n - k};
  parts.insert(parts.end(), static_cast<std::size_t>(k), 1);
  return Partition(std::move(parts));
}

enum class PartitionClass { trivial, fat, tall, medium, sign };

inline std::string_view to_string(PartitionClass c) {
  switch (c) {
    case PartitionClass::trivial: return "trivial";
    case PartitionClass::fat: return "fat";
    case PartitionClass::tall: return "tall";
    case PartitionClass::medium: return "medium";
    case PartitionClass::sign: return "sign";
  }
  return "?";
}

inline PartitionClass classify(const Partition& p, int k) {
  const int n = p.n();
  require(k >= 1, "classify: k must be positive");
  require(n >= 2 * k + 1, "classify: requires n >= 2k+1");
  if (p.length() == 1) return PartitionClass::trivial;
  if (p.first_row() == 1) return PartitionClass::sign;
  if (p.first_row() >= n - k) return PartitionClass::fat;
  if (p.first_column() >= n - k) return PartitionClass::tall;
  return PartitionClass::medium;
}

/// All partitions >= (n-k, 1^k) in decreasing lexicographic order. Its
/// length q_k = p_0 + ... + p_k does not depend on n once n >= 2k.
inline std::vector<Partition> fat_list(int n, int k) {
  require(k >= 0 && n >= 2 * k && n >= 1, "fat_list: requires n >= 2k");
  std::vector<Partition> out;
  for (int t = 0; t <= k; ++t) {
    for (const Partition& rest : enumerate_partitions(t)) {
      std::vector<int> parts{n - t};
      parts.insert(parts.end(), rest.parts().begin(), rest.parts().end());
      out.emplace_back(std::move(parts));
    }
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

struct DimBoundReport {
  Integer min_medium_dim;
  Partition min_medium_at;
  bool long_row_checks = true;
  std::size_t long_row_checked = 0;
  std::optional<Partition> long_row_failure;
};

/// Concrete dimension facts at one n.
///
/// `min_medium_dim` is the smallest irreducible dimension among medium
/// partitions. `long_row_checks` verifies, for every partition whose first
/// row or first column has length n-t with k+1 <= t < n/2, the exact
/// inequality  prod(hooks) <= t! (n-t)! (n/(n-t))^(n-t), which is the bound
/// that yields dim >= binom(n,t) e^{-t}. Cleared of denominators it reads
///   prod(hooks) * (n-t)^(n-t) <= t! (n-t)! n^(n-t).
inline DimBoundReport dim_bound_report(int n, int k) {
  require(k >= 1 && n >= 2 * k + 2, "dim_bound_report: requires n >= 2k+2");
  DimBoundReport r;
  bool have_medium = false;
  for (const Partition& p : enumerate_partitions(n)) {
    const Integer d = dim_irrep(p);
    if (classify(p, k) == PartitionClass::medium && (!have_medium || d < r.min_medium_dim)) {
      r.min_medium_dim = d;
      r.min_medium_at = p;
      have_medium = true;
    }
    const int long_side = std::max(p.first_row(), p.first_column());
    const int t = n - long_side;
    if (t >= k + 1 && 2 * t < n) {
      ++r.long_row_checked;
      Integer lhs = hook_product(p);
      Integer rhs = factorial(static_cast<unsigned>(t)) * factorial(static_cast<unsigned>(n - t));
      Integer pow_nt, pow_n;
      mpz_ui_pow_ui(pow_nt.get_mpz_t(), static_cast<unsigned long>(n - t),
                    static_cast<unsigned long>(n - t));
      mpz_ui_pow_ui(pow_n.get_mpz_t(), static_cast<unsigned long>(n),
                    static_cast<unsigned long>(n - t));
      if (lhs * pow_nt > rhs * pow_n) {
        r.long_row_checks = false;
        if (!r.long_row_failure) r.long_row_failure = p;
      }
    }
  }
  return r;
}

}  // namespace kint
