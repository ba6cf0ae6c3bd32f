#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "kint/birkhoff.hpp"
#include "kint/characters.hpp"
#include "kint/engine.hpp"
#include "kint/errors.hpp"
#include "kint/group_algebra.hpp"
#include "kint/permutation.hpp"
#include "kint/rational.hpp"
#include "kint/spectrum.hpp"

namespace kint {

inline constexpr int kSearchCap = 5;
inline constexpr int kAffineFieldCap = 9;
inline constexpr int kCyclicCertificateCap = 9;

inline bool k_intersects(const Permutation& sigma, const Permutation& tau, int k) {
  require(sigma.n() == tau.n(), "k_intersects: size mismatch");
  return agreements(sigma, tau) >= k;
}

/// A family of permutations, stored as sorted Lehmer ranks.
using Family = std::vector<std::uint64_t>;

inline bool is_k_intersecting(const std::vector<Permutation>& family, int k) {
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      if (!k_intersects(family[a], family[b], k)) return false;
  return true;
}

inline std::vector<Permutation> unrank_family(int n, const Family& f) {
  std::vector<Permutation> out;
  for (auto r : f) out.push_back(Permutation::unrank(n, r));
  return out;
}

inline Family coset_family(const CosetLabel& label, int n) {
  label.validate(n);
  Family f;
  const auto perms = all_permutations(n);
  for (std::size_t i = 0; i < perms.size(); ++i)
    if (label.contains(perms[i])) f.push_back(i);
  return f;
}

struct FamilyReport {
  int n = 0;
  int k = 0;
  std::size_t max_size = 0;
  /// floor(n! * Hoffman ratio of Gamma_k); an admissible cutoff for the search
  std::size_t hoffman_bound = 0;
  std::vector<Family> extremal_families;
  bool all_are_cosets = false;
  bool symmetry_reduced = false;
};

namespace detail {

class Bitset {
 public:
  explicit Bitset(std::size_t n = 0) : n_(n), w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= 1ULL << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(1ULL << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1ULL; }
  std::size_t first() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return i * 64 + static_cast<std::size_t>(__builtin_ctzll(w_[i]));
    return n_;
  }
  Bitset without(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & ~o.w_[i];
    return r;
  }
  bool any() const {
    for (auto x : w_)
      if (x) return true;
    return false;
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto x : w_) c += static_cast<std::size_t>(__builtin_popcountll(x));
    return c;
  }
  Bitset operator&(const Bitset& o) const {
    Bitset r(n_);
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] = w_[i] & o.w_[i];
    return r;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (auto x = w_[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(__builtin_ctzll(x)));
  }

 private:
  std::size_t n_;
  std::vector<std::uint64_t> w_;
};

// Maximum cliques by branch and bound with greedy-colouring bounds. With
// `all` set every maximum clique is collected; otherwise the search stops as
// soon as a clique of size `cutoff` is found.
class CliqueSearch {
 public:
  CliqueSearch(std::vector<Bitset> adj, bool all, std::size_t cutoff)
      : adj_(std::move(adj)), all_(all), cutoff_(cutoff) {}

  void run(const std::vector<std::size_t>& start, const Bitset& candidates) {
    current_ = start;
    expand(candidates);
  }

  std::size_t best() const { return best_; }
  const std::vector<std::vector<std::size_t>>& cliques() const { return found_; }

 private:
  void expand(Bitset p) {
    if (done_) return;
    if (!p.any()) {
      record();
      return;
    }
    // colour classes: vertices in colour order with their colour numbers
    std::vector<std::size_t> order, colour;
    Bitset uncoloured = p;
    std::size_t c = 0;
    while (uncoloured.any()) {
      ++c;
      Bitset q = uncoloured;
      while (q.any()) {
        const std::size_t v = q.first();
        uncoloured.reset(v);
        q.reset(v);
        q = q.without(adj_[v]);
        order.push_back(v);
        colour.push_back(c);
      }
    }
    for (std::size_t idx = order.size(); idx-- > 0;) {
      const std::size_t bound = current_.size() + colour[idx];
      if (all_ ? bound < best_ : bound <= best_) return;
      const std::size_t v = order[idx];
      current_.push_back(v);
      Bitset next = p & adj_[v];
      if (next.any())
        expand(next);
      else
        record();
      current_.pop_back();
      if (done_) return;
      p.reset(v);
    }
  }

  void record() {
    if (current_.size() > best_) {
      best_ = current_.size();
      found_.clear();
    }
    if (current_.size() == best_ && (all_ || found_.empty())) found_.push_back(current_);
    if (!all_ && best_ >= cutoff_) done_ = true;
  }

  std::vector<Bitset> adj_;
  bool all_;
  std::size_t cutoff_;
  std::size_t best_ = 0;
  bool done_ = false;
  std::vector<std::size_t> current_;
  std::vector<std::vector<std::size_t>> found_;
};

inline std::size_t gamma_hoffman_bound(int n, int k) {
  const auto table = shared_character_table(n);
  const auto spec = fpf_spectrum(n, k, *table);
  Rational lmin = spec.begin()->second;
  for (const auto& [rep, l] : spec) lmin = std::min(lmin, l);
  const Rational lambda1 = spec.at(Partition({n}));
  if (lmin >= 0) return static_cast<std::size_t>(to_i64(factorial(static_cast<unsigned>(n))));
  const Rational r = hoffman_ratio(lambda1, lmin) * factorial(static_cast<unsigned>(n));
  return static_cast<std::size_t>(to_i64(r.get_num() / r.get_den()));
}

}  // namespace detail

/// Exact maximum k-intersecting families in S_n by clique search in the
/// agreement graph. Every family can be left-translated to contain the
/// identity, so the search only runs inside the identity's neighbourhood;
/// unless `symmetry_reduce` is set, all translates are then listed.
inline FamilyReport max_k_intersecting(int n, int k, bool all_extremal = true, bool symmetry_reduce = false) {
  require(n >= 2 && k >= 1 && k < n, "max_k_intersecting: requires 1 <= k < n");
  require(n <= kSearchCap || (n == 6 && k == 1), "max_k_intersecting: exhaustive search is capped at n <= 5 (and n=6, k=1)");
  FamilyReport rep;
  rep.n = n;
  rep.k = k;
  rep.symmetry_reduced = symmetry_reduce;
  rep.hoffman_bound = detail::gamma_hoffman_bound(n, k);
  const auto perms = all_permutations(n);
  const std::size_t m = perms.size();
  std::vector<detail::Bitset> adj(m, detail::Bitset(m));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      if (k_intersects(perms[a], perms[b], k)) adj[a].set(b), adj[b].set(a);
  detail::CliqueSearch search(adj, all_extremal, rep.hoffman_bound);
  search.run({0}, adj[0]);
  rep.max_size = search.best();
  std::set<Family> families;
  for (const auto& c : search.cliques()) {
    Family base(c.begin(), c.end());
    std::sort(base.begin(), base.end());
    if (symmetry_reduce) {
      families.insert(base);
      continue;
    }
    for (const auto& g : perms) {
      Family t;
      for (auto r : base) t.push_back((g * perms[r]).rank());
      std::sort(t.begin(), t.end());
      families.insert(std::move(t));
    }
  }
  rep.extremal_families.assign(families.begin(), families.end());
  for (const auto& f : rep.extremal_families)
    if (f.size() != rep.max_size || !is_k_intersecting(unrank_family(n, f), k))
      throw std::logic_error("clique search returned an invalid family");
  std::set<Family> cosets;
  for (const auto& a : ordered_tuples(n, k))
    for (const auto& b : ordered_tuples(n, k)) cosets.insert(coset_family({a, b}, n));
  rep.all_are_cosets = std::all_of(rep.extremal_families.begin(), rep.extremal_families.end(),
                                   [&](const Family& f) { return cosets.count(f) == 1; });
  return rep;
}

struct CrossReport {
  bool cross_intersecting = false;
  std::optional<std::pair<Permutation, Permutation>> witness;  // a disagreeing pair
  Integer product;
  Integer bound;  // ((n-k)!)^2
  bool within_bound = false;
};

inline CrossReport cross_product_check(int n, int k, const std::vector<Permutation>& i_family,
                                       const std::vector<Permutation>& j_family) {
  require(n >= 2 && n <= kSearchCap && k >= 1 && k < n, "cross_product_check: requires n <= 5 and 1 <= k < n");
  for (const auto* fam : {&i_family, &j_family})
    for (const auto& p : *fam) require(p.n() == n, "cross_product_check: permutation of the wrong size");
  CrossReport r;
  r.cross_intersecting = true;
  for (const auto& a : i_family) {
    for (const auto& b : j_family)
      if (!k_intersects(a, b, k)) {
        r.cross_intersecting = false;
        r.witness.emplace(a, b);
        break;
      }
    if (r.witness) break;
  }
  r.product = Integer(static_cast<unsigned long>(i_family.size())) * static_cast<unsigned long>(j_family.size());
  const Integer f = factorial(static_cast<unsigned>(n - k));
  r.bound = f * f;
  r.within_bound = r.product <= r.bound;
  return r;
}

/// Arithmetic in the field with q <= 9 elements. Elements are 0..q-1 read
/// as base-p digit vectors of polynomials modulo a fixed irreducible:
/// x^2+x+1 (q=4), x^3+x+1 (q=8), x^2+1 (q=9).
class FiniteField {
 public:
  explicit FiniteField(int q) : q_(q) {
    require(q >= 2 && q <= kAffineFieldCap, "finite field: order must be a prime power <= 9");
    switch (q) {
      case 2: case 3: case 5: case 7: p_ = q, m_ = 1; break;
      case 4: p_ = 2, m_ = 2, modulus_ = {1, 1, 1}; break;
      case 8: p_ = 2, m_ = 3, modulus_ = {1, 1, 0, 1}; break;
      case 9: p_ = 3, m_ = 2, modulus_ = {1, 0, 1}; break;
      default: throw InvalidInput("finite field: " + std::to_string(q) + " is not a prime power");
    }
  }

  int order() const { return q_; }

  int add(int a, int b) const {
    auto x = digits(a), y = digits(b);
    for (int i = 0; i < m_; ++i) x[i] = (x[i] + y[i]) % p_;
    return number(x);
  }

  int mul(int a, int b) const {
    if (m_ == 1) return a * b % p_;
    const auto x = digits(a), y = digits(b);
    std::vector<int> prod(static_cast<std::size_t>(2 * m_ - 1), 0);
    for (int i = 0; i < m_; ++i)
      for (int j = 0; j < m_; ++j) prod[i + j] = (prod[i + j] + x[i] * y[j]) % p_;
    // reduce by the monic modulus from the top degree down
    for (int d = 2 * m_ - 2; d >= m_; --d) {
      const int c = prod[d];
      if (!c) continue;
      for (int i = 0; i <= m_; ++i) prod[d - m_ + i] = ((prod[d - m_ + i] - c * modulus_[i]) % p_ + p_) % p_;
    }
    prod.resize(static_cast<std::size_t>(m_));
    return number(prod);
  }

 private:
  std::vector<int> digits(int a) const {
    std::vector<int> d(static_cast<std::size_t>(m_));
    for (int i = 0; i < m_; ++i, a /= p_) d[i] = a % p_;
    return d;
  }
  int number(const std::vector<int>& d) const {
    int a = 0;
    for (int i = m_; i-- > 0;) a = a * p_ + d[i];
    return a;
  }

  int q_;
  int p_ = 0;
  int m_ = 1;
  std::vector<int> modulus_;  // coefficients low to high, monic
};

enum class CertificateMode { cyclic, affine };

struct SharplyTransitiveCertificate {
  CertificateMode mode = CertificateMode::cyclic;
  int n = 0;
  std::vector<Permutation> group;
  std::vector<Family> cells;  // left cosets of the group
  /// largest agreement between distinct members of one cell
  int max_agreement = 0;
  /// families that are (max_agreement+1)-intersecting meet each cell at most
  /// once, so they have at most cells.size() members
  bool verified = false;
};

namespace detail {

inline SharplyTransitiveCertificate certify_group(CertificateMode mode, int n, std::vector<Permutation> group,
                                                  int allowed_agreement) {
  SharplyTransitiveCertificate c;
  c.mode = mode;
  c.n = n;
  c.group = std::move(group);
  const std::uint64_t total = static_cast<std::uint64_t>(to_i64(factorial(static_cast<unsigned>(n))));
  std::vector<bool> seen(total, false);
  for (std::uint64_t r = 0; r < total; ++r) {
    if (seen[r]) continue;
    const Permutation s = Permutation::unrank(n, r);
    Family cell;
    std::vector<Permutation> members;
    for (const auto& h : c.group) {
      members.push_back(s * h);
      cell.push_back(members.back().rank());
      seen[cell.back()] = true;
    }
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        c.max_agreement = std::max(c.max_agreement, agreements(members[a], members[b]));
    std::sort(cell.begin(), cell.end());
    c.cells.push_back(std::move(cell));
  }
  std::size_t covered = 0;
  for (const auto& cell : c.cells) covered += cell.size();
  c.verified = covered == total && c.max_agreement <= allowed_agreement &&
               c.cells.size() * c.group.size() == total;
  return c;
}

}  // namespace detail

/// Left cosets of the cyclic group generated by (1 2 ... n); distinct members
/// of a coset never agree.
inline SharplyTransitiveCertificate cyclic_certificate(int n) {
  require(n >= 2 && n <= kCyclicCertificateCap, "cyclic certificate: requires 2 <= n <= 9");
  std::vector<Permutation> group;
  for (int s = 0; s < n; ++s) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) im[i] = (i + s) % n;
    group.emplace_back(im);
  }
  return detail::certify_group(CertificateMode::cyclic, n, std::move(group), 0);
}

/// Left cosets of the affine group x -> a x + b over the field of order q;
/// distinct members of a coset agree on at most one point.
inline SharplyTransitiveCertificate affine_certificate(int q) {
  const FiniteField f(q);
  std::vector<Permutation> group;
  for (int a = 1; a < q; ++a)
    for (int b = 0; b < q; ++b) {
      std::vector<int> im(static_cast<std::size_t>(q));
      for (int x = 0; x < q; ++x) im[x] = f.add(f.mul(a, x), b);
      group.emplace_back(im);
    }
  return detail::certify_group(CertificateMode::affine, q, std::move(group), 1);
}

struct ConjectureFamily {
  int n = 0;
  int k = 0;
  int i = 0;
  Family members;
  bool k_intersecting = false;
  /// closed form for i = 0 and i = 1; unset otherwise
  std::optional<Integer> formula_size;
};

/// M_i = {sigma : sigma has at least k+i fixed points in {1, ..., k+2i}}.
inline ConjectureFamily conjecture_family(int n, int k, int i) {
  require(k >= 1 && k < n && n <= kGroupAlgebraCap, "conjecture_family: requires 1 <= k < n <= 7");
  require(i >= 0 && 2 * i <= n - k, "conjecture_family: requires 0 <= i <= (n-k)/2");
  ConjectureFamily c{n, k, i, {}, false, std::nullopt};
  const auto perms = all_permutations(n);
  for (std::size_t r = 0; r < perms.size(); ++r) {
    int fixed = 0;
    for (int x = 0; x < k + 2 * i; ++x) fixed += perms[r](x) == x;
    if (fixed >= k + i) c.members.push_back(r);
  }
  c.k_intersecting = is_k_intersecting(unrank_family(n, c.members), k);
  if (i == 0) c.formula_size = factorial(static_cast<unsigned>(n - k));
  if (i == 1 && n - k >= 2)
    c.formula_size = Integer(k + 2) * factorial(static_cast<unsigned>(n - k - 1)) -
                     Integer(k + 1) * factorial(static_cast<unsigned>(n - k - 2));
  return c;
}

struct PipelineVerdict {
  int n = 0;
  int k = 0;
  std::size_t max_size = 0;
  std::size_t families = 0;
  std::size_t size_ok = 0;
  std::size_t in_vk = 0;
  std::size_t single_coset = 0;
  bool all_pass() const {
    return families > 0 && size_ok == families && in_vk == families && single_coset == families;
  }
};

/// For every maximum family: size (n-k)!, indicator in V_k, and peeling
/// yields exactly one k-coset.
inline PipelineVerdict verify_upper_bound_pipeline(int n, int k, bool symmetry_reduce = false) {
  require(n <= kSearchCap, "verify_upper_bound_pipeline: requires n <= 5");
  const auto rep = max_k_intersecting(n, k, true, symmetry_reduce);
  const auto table = shared_character_table(n);
  PipelineVerdict v{n, k, rep.max_size, rep.extremal_families.size(), 0, 0, 0};
  const Integer target = factorial(static_cast<unsigned>(n - k));
  for (const auto& fam : rep.extremal_families) {
    if (Integer(static_cast<unsigned long>(fam.size())) == target) ++v.size_ok;
    auto f = GroupFunction::zero(n);
    for (auto r : fam) f.values[r] = 1;
    if (!is_in_vk(f, k, *table)) continue;
    ++v.in_vk;
    if (boolean_peel(f, k, *table).size() == 1) ++v.single_coset;
  }
  return v;
}

}  // namespace kint
