#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "kint/errors.hpp"
#include "kint/partition.hpp"

namespace kint {

/// A permutation of {0, ..., n-1} in one-line notation.
///
/// Composition follows function notation: (a * b)(i) = a(b(i)).
/// Text and JSON forms are 1-based.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<bool> seen(image_.size(), false);
    for (int v : image_) {
      require(v >= 0 && v < static_cast<int>(image_.size()) && !seen[v],
              "not a permutation in one-line notation");
      seen[v] = true;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 0);
    return Permutation(std::move(im));
  }

  static Permutation from_one_based(const std::vector<int>& image) {
    std::vector<int> im(image);
    for (int& v : im) --v;
    return Permutation(std::move(im));
  }

  /// Permutation with the given Lehmer rank among the n! permutations in
  /// lexicographic order of one-line notation (rank 0 is the identity).
  static Permutation unrank(int n, std::uint64_t rank) {
    std::vector<int> pool(static_cast<std::size_t>(n));
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::uint64_t> fact(static_cast<std::size_t>(n) + 1, 1);
    for (int i = 1; i <= n; ++i) fact[i] = fact[i - 1] * static_cast<std::uint64_t>(i);
    require(rank < fact[n], "Lehmer rank out of range");
    std::vector<int> im;
    im.reserve(pool.size());
    for (int i = n - 1; i >= 0; --i) {
      auto q = rank / fact[i];
      rank %= fact[i];
      im.push_back(pool[q]);
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(q));
    }
    return Permutation(std::move(im));
  }

  int n() const { return static_cast<int>(image_.size()); }
  int operator()(int i) const { return image_[i]; }
  const std::vector<int>& image() const { return image_; }

  std::uint64_t rank() const {
    std::uint64_t r = 0;
    const int m = n();
    for (int i = 0; i < m; ++i) {
      std::uint64_t smaller = 0;
      for (int j = i + 1; j < m; ++j) smaller += image_[j] < image_[i];
      r = r * static_cast<std::uint64_t>(m - i) + smaller;
    }
    return r;
  }

  Permutation inverse() const {
    std::vector<int> inv(image_.size());
    for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<int>(i);
    return Permutation(std::move(inv));
  }

  friend Permutation operator*(const Permutation& a, const Permutation& b) {
    require(a.n() == b.n(), "composing permutations of different degree");
    std::vector<int> im(b.image_.size());
    for (std::size_t i = 0; i < im.size(); ++i) im[i] = a.image_[b.image_[i]];
    return Permutation(std::move(im));
  }

  Partition cycle_type() const {
    std::vector<bool> seen(image_.size(), false);
    std::vector<int> lens;
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (seen[i]) continue;
      int len = 0;
      for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(image_[j])) {
        seen[j] = true;
        ++len;
      }
      lens.push_back(len);
    }
    std::sort(lens.begin(), lens.end(), std::greater<>());
    return Partition(std::move(lens));
  }

  int fixed_points() const {
    int c = 0;
    for (std::size_t i = 0; i < image_.size(); ++i) c += image_[i] == static_cast<int>(i);
    return c;
  }

  bool is_even() const { return cycle_type().is_even_class(); }

  std::string to_string() const {
    std::string s = "[";
    for (std::size_t i = 0; i < image_.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(image_[i] + 1);
    }
    return s + "]";
  }

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> image_;
};

/// All n! permutations, index == Lehmer rank.
inline std::vector<Permutation> all_permutations(int n) {
  require(n >= 0 && n <= 10, "all_permutations: n out of range");
  std::vector<int> im(static_cast<std::size_t>(n));
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

/// Number of points on which the two permutations agree.
inline int agreements(const Permutation& a, const Permutation& b) {
  int c = 0;
  for (int i = 0; i < a.n(); ++i) c += a(i) == b(i);
  return c;
}

/// Ordered k-tuples of distinct elements of {0..n-1}, lexicographic.
inline std::vector<std::vector<int>> ordered_tuples(int n, int k) {
  require(k >= 0 && k <= n, "ordered_tuples: requires 0 <= k <= n");
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = 0; v < n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

}  // namespace kint
