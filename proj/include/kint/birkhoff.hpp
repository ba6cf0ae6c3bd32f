#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kint/characters.hpp"
#include "kint/errors.hpp"
#include "kint/group_algebra.hpp"
#include "kint/matrix.hpp"
#include "kint/permutation.hpp"
#include "kint/rational.hpp"
#include "kint/simplex.hpp"

namespace kint {

inline constexpr int kTupleMatrixCap = 7;

/// (n)_k x (n)_k matrix with rows and columns indexed by ordered k-tuples of
/// distinct elements of [n] (0-based), in lexicographic order.
class TupleMatrix {
 public:
  TupleMatrix(int n, int k) : n_(n), k_(k) {
    require(k >= 1 && k < n && n <= kTupleMatrixCap, "tuple matrix: requires 1 <= k < n <= 7");
    tuples_ = ordered_tuples(n, k);
    for (std::size_t i = 0; i < tuples_.size(); ++i) index_.emplace(tuples_[i], i);
    entries_ = Matrix<Rational>(tuples_.size(), tuples_.size());
  }

  int n() const { return n_; }
  int k() const { return k_; }
  std::size_t size() const { return tuples_.size(); }
  const std::vector<std::vector<int>>& tuples() const { return tuples_; }
  std::size_t index_of(const std::vector<int>& t) const {
    auto it = index_.find(t);
    require(it != index_.end(), "tuple matrix: not an ordered tuple of distinct elements");
    return it->second;
  }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_(r, c); }
  const Rational& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  const Matrix<Rational>& entries() const { return entries_; }

  friend bool operator==(const TupleMatrix& a, const TupleMatrix& b) {
    return a.n_ == b.n_ && a.k_ == b.k_ && a.entries_ == b.entries_;
  }
  friend TupleMatrix operator+(TupleMatrix a, const TupleMatrix& b) {
    require(a.n_ == b.n_ && a.k_ == b.k_, "tuple matrix sum: shape mismatch");
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c) a(r, c) += b(r, c);
    return a;
  }
  friend TupleMatrix operator*(const Rational& s, TupleMatrix a) {
    for (std::size_t r = 0; r < a.size(); ++r)
      for (std::size_t c = 0; c < a.size(); ++c) a(r, c) *= s;
    return a;
  }

 private:
  int n_;
  int k_;
  std::vector<std::vector<int>> tuples_;
  std::map<std::vector<int>, std::size_t> index_;
  Matrix<Rational> entries_;
};

/// P_sigma^{(k)}: entry (alpha, sigma(alpha)) = 1.
inline TupleMatrix induced_perm_matrix(const Permutation& sigma, int k) {
  TupleMatrix m(sigma.n(), k);
  for (std::size_t r = 0; r < m.size(); ++r) {
    std::vector<int> image;
    for (int a : m.tuples()[r]) image.push_back(sigma(a));
    m(r, m.index_of(image)) = 1;
  }
  return m;
}

enum class Axis { row, column };

/// Recursive k-line descriptor. At each level: split the current block by
/// tuple position `coord`, take the row (or column) of sub-blocks whose
/// `coord` entry is `index`, then one sub-line per sub-block along it, in
/// increasing order of the other axis's entry. At the last level the line is
/// a plain row or column and `sub` is empty.
struct KLine {
  int coord = 0;
  Axis axis = Axis::row;
  int index = 0;
  std::vector<KLine> sub;
};

namespace detail {

// A sub-block of a TupleMatrix: rows and columns share fixed entries on the
// positions already split off; `coords` are the positions still free.
struct TupleBlock {
  std::vector<int> coords;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

inline TupleBlock full_block(const TupleMatrix& m) {
  TupleBlock b;
  for (int p = 0; p < m.k(); ++p) b.coords.push_back(p);
  for (std::size_t i = 0; i < m.size(); ++i) {
    b.rows.push_back(i);
    b.cols.push_back(i);
  }
  return b;
}

// Distinct values at position p among the given tuple indices, ascending.
inline std::vector<int> values_at(const TupleMatrix& m, const std::vector<std::size_t>& idx, int p) {
  std::vector<int> v;
  for (auto i : idx) v.push_back(m.tuples()[i][p]);
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

inline std::vector<std::size_t> with_value(const TupleMatrix& m, const std::vector<std::size_t>& idx, int p, int value) {
  std::vector<std::size_t> out;
  for (auto i : idx)
    if (m.tuples()[i][p] == value) out.push_back(i);
  return out;
}

inline TupleBlock sub_block(const TupleMatrix& m, const TupleBlock& b, int p, int row_value, int col_value) {
  TupleBlock s;
  for (int c : b.coords)
    if (c != p) s.coords.push_back(c);
  s.rows = with_value(m, b.rows, p, row_value);
  s.cols = with_value(m, b.cols, p, col_value);
  return s;
}

inline void collect_cells(const TupleMatrix& m, const TupleBlock& b, const KLine& line,
                          std::vector<std::pair<std::size_t, std::size_t>>& out) {
  require(std::find(b.coords.begin(), b.coords.end(), line.coord) != b.coords.end(),
          "k-line: coordinate already used or out of range");
  const auto row_vals = values_at(m, b.rows, line.coord);
  const auto col_vals = values_at(m, b.cols, line.coord);
  const auto& own = line.axis == Axis::row ? row_vals : col_vals;
  const auto& other = line.axis == Axis::row ? col_vals : row_vals;
  require(std::binary_search(own.begin(), own.end(), line.index), "k-line: index not available in this block");
  if (b.coords.size() == 1) {
    require(line.sub.empty(), "k-line: base level takes no sub-lines");
    const auto fixed = with_value(m, line.axis == Axis::row ? b.rows : b.cols, line.coord, line.index);
    for (auto f : fixed)
      for (auto o : line.axis == Axis::row ? b.cols : b.rows)
        out.push_back(line.axis == Axis::row ? std::make_pair(f, o) : std::make_pair(o, f));
    return;
  }
  require(line.sub.size() == other.size(), "k-line: needs one sub-line per block");
  for (std::size_t j = 0; j < other.size(); ++j) {
    const auto s = line.axis == Axis::row ? sub_block(m, b, line.coord, line.index, other[j])
                                          : sub_block(m, b, line.coord, other[j], line.index);
    collect_cells(m, s, line.sub[j], out);
  }
}

inline KLine random_line_in(const TupleMatrix& m, const TupleBlock& b, const std::function<std::size_t(std::size_t)>& pick) {
  KLine line;
  line.coord = b.coords[pick(b.coords.size())];
  line.axis = pick(2) ? Axis::column : Axis::row;
  const auto row_vals = values_at(m, b.rows, line.coord);
  const auto col_vals = values_at(m, b.cols, line.coord);
  const auto& own = line.axis == Axis::row ? row_vals : col_vals;
  const auto& other = line.axis == Axis::row ? col_vals : row_vals;
  line.index = own[pick(own.size())];
  if (b.coords.size() == 1) return line;
  for (int o : other) {
    const auto s = line.axis == Axis::row ? sub_block(m, b, line.coord, line.index, o)
                                          : sub_block(m, b, line.coord, o, line.index);
    line.sub.push_back(random_line_in(m, s, pick));
  }
  return line;
}

inline Rational block_sum(const TupleMatrix& m, const TupleBlock& b) {
  Rational s = 0;
  for (auto r : b.rows)
    for (auto c : b.cols)
      if (m(r, c) != 0) s += m(r, c);
  return s;
}

// Every line of the block sums to `scale` under every ordering of the free
// coordinates. Entries are already known to be nonnegative.
inline bool scaled_bistochastic(const TupleMatrix& m, const TupleBlock& b, const Rational& scale, std::string& why) {
  const int n = m.n();
  const int depth = static_cast<int>(b.coords.size());
  // (m-1)_{depth-1}, where the block's ground sets have n - (k - depth) elements
  const Integer inner =
      falling_factorial(static_cast<unsigned>(n - (m.k() - depth) - 1), static_cast<unsigned>(depth - 1));
  for (int p : b.coords) {
    const auto row_vals = values_at(m, b.rows, p);
    const auto col_vals = values_at(m, b.cols, p);
    Matrix<Rational> r(row_vals.size(), col_vals.size());
    std::vector<std::vector<TupleBlock>> blocks(row_vals.size());
    for (std::size_t i = 0; i < row_vals.size(); ++i)
      for (std::size_t j = 0; j < col_vals.size(); ++j) {
        blocks[i].push_back(sub_block(m, b, p, row_vals[i], col_vals[j]));
        r(i, j) = block_sum(m, blocks[i][j]) / inner;
      }
    for (std::size_t i = 0; i < r.rows(); ++i) {
      Rational row = 0, col = 0;
      for (std::size_t j = 0; j < r.cols(); ++j) {
        row += r(i, j);
        col += r(j, i);
      }
      if (row != scale || col != scale) {
        why = "block sums split by position " + std::to_string(p + 1) + " are not bistochastic";
        return false;
      }
    }
    if (depth == 1) continue;
    for (std::size_t i = 0; i < r.rows(); ++i)
      for (std::size_t j = 0; j < r.cols(); ++j)
        if (r(i, j) != 0 && !scaled_bistochastic(m, blocks[i][j], r(i, j), why)) return false;
  }
  return true;
}

}  // namespace detail

/// Cells (row index, column index) of a k-line.
inline std::vector<std::pair<std::size_t, std::size_t>> k_line_cells(const TupleMatrix& shape, const KLine& line) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  detail::collect_cells(shape, detail::full_block(shape), line, out);
  std::sort(out.begin(), out.end());
  return out;
}

/// A uniformly built random k-line; `pick(m)` must return a value in [0, m).
inline KLine random_k_line(const TupleMatrix& shape, const std::function<std::size_t(std::size_t)>& pick) {
  return detail::random_line_in(shape, detail::full_block(shape), pick);
}

struct BistochasticVerdict {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

/// Recursive check: under every choice of splitting position, the block sums
/// scaled by 1/(n-1)_{k-1} form a bistochastic R and every block with
/// r_ij > 0 is r_ij times a (k-1)-bistochastic matrix. Blocks with r_ij = 0
/// are zero because entries are nonnegative.
inline BistochasticVerdict is_k_bistochastic(const TupleMatrix& m) {
  for (std::size_t r = 0; r < m.size(); ++r)
    for (std::size_t c = 0; c < m.size(); ++c)
      if (m(r, c) < 0) return {false, "negative entry at row " + std::to_string(r) + ", column " + std::to_string(c)};
  BistochasticVerdict v;
  v.ok = detail::scaled_bistochastic(m, detail::full_block(m), Rational(1), v.reason);
  return v;
}

struct BirkhoffTerm {
  Rational weight;
  Permutation sigma;
};

namespace detail {

// Some sigma with m(alpha, sigma(alpha)) > 0 for every tuple alpha, by
// backtracking over partial maps; a tuple is checked once all its entries
// are assigned.
inline std::optional<Permutation> positive_induced_support(const TupleMatrix& m) {
  const int n = m.n();
  std::vector<std::vector<std::size_t>> completed_by(static_cast<std::size_t>(n));
  for (std::size_t r = 0; r < m.size(); ++r) {
    const auto& t = m.tuples()[r];
    completed_by[*std::max_element(t.begin(), t.end())].push_back(r);
  }
  std::vector<int> image(static_cast<std::size_t>(n), -1);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::function<bool(int)> go = [&](int x) {
    if (x == n) return true;
    for (int y = 0; y < n; ++y) {
      if (used[y]) continue;
      image[x] = y;
      bool ok = true;
      for (auto r : completed_by[x]) {
        std::vector<int> img;
        for (int a : m.tuples()[r]) img.push_back(image[a]);
        if (m(r, m.index_of(img)) <= 0) {
          ok = false;
          break;
        }
      }
      if (ok) {
        used[y] = true;
        if (go(x + 1)) return true;
        used[y] = false;
      }
    }
    image[x] = -1;
    return false;
  };
  if (!go(0)) return std::nullopt;
  return Permutation(image);
}

// Caratheodory reduction: while the matrices are affinely dependent, shift
// weight along the dependency until some weight vanishes.
inline void caratheodory_reduce(std::vector<BirkhoffTerm>& terms, int k) {
  for (;;) {
    const std::size_t t = terms.size();
    if (t <= 1) return;
    std::vector<TupleMatrix> mats;
    for (const auto& term : terms) mats.push_back(induced_perm_matrix(term.sigma, k));
    const std::size_t cells = mats[0].size() * mats[0].size();
    // columns = terms; rows = cells plus the affine row of ones
    Matrix<Rational> a(cells + 1, t);
    for (std::size_t j = 0; j < t; ++j) {
      for (std::size_t c = 0; c < cells; ++c) a(c, j) = mats[j](c / mats[0].size(), c % mats[0].size());
      a(cells, j) = 1;
    }
    Matrix<Rational> red = a;
    const auto pivots = row_reduce(red);
    if (pivots.size() == t) return;
    // kernel vector from the first free column
    std::vector<bool> is_pivot(t, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::vector<Rational> z(t, Rational(0));
    z[free_col] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) z[pivots[i]] = -red(i, free_col);
    // sum z = 0 and z != 0, so some z_j > 0
    std::optional<Rational> step;
    for (std::size_t j = 0; j < t; ++j)
      if (z[j] > 0 && (!step || terms[j].weight / z[j] < *step)) step = terms[j].weight / z[j];
    std::vector<BirkhoffTerm> kept;
    for (std::size_t j = 0; j < t; ++j) {
      Rational w = terms[j].weight - *step * z[j];
      if (w > 0) kept.push_back({w, terms[j].sigma});
    }
    terms = std::move(kept);
  }
}

}  // namespace detail

/// Convex decomposition of a k-bistochastic matrix into induced permutation
/// matrices: repeatedly find sigma positive along its support, subtract the
/// smallest such entry times P_sigma^{(k)}.
inline std::vector<BirkhoffTerm> gen_birkhoff_decompose(const TupleMatrix& m) {
  if (auto v = is_k_bistochastic(m); !v) throw InvalidInput("matrix is not k-bistochastic: " + v.reason);
  TupleMatrix rest = m;
  std::vector<BirkhoffTerm> terms;
  Rational total = 0;
  while (total < 1) {
    auto sigma = detail::positive_induced_support(rest);
    if (!sigma) throw TheoremViolation("no induced permutation fits the positive support of a k-bistochastic matrix");
    Rational eps;
    bool first = true;
    for (std::size_t r = 0; r < rest.size(); ++r) {
      std::vector<int> img;
      for (int a : rest.tuples()[r]) img.push_back((*sigma)(a));
      const auto& v = rest(r, rest.index_of(img));
      if (first || v < eps) eps = v;
      first = false;
    }
    rest = rest + (-eps) * induced_perm_matrix(*sigma, m.k());
    terms.push_back({eps, *sigma});
    total += eps;
  }
  TupleMatrix check(m.n(), m.k());
  for (const auto& t : terms) check = check + t.weight * induced_perm_matrix(t.sigma, m.k());
  if (!(check == m)) throw std::logic_error("generalized Birkhoff decomposition does not re-sum");
  return terms;
}

/// Classical Birkhoff decomposition (k = 1), reduced to at most (n-1)^2 + 1 terms.
inline std::vector<BirkhoffTerm> birkhoff_decompose(const TupleMatrix& m) {
  require(m.k() == 1, "birkhoff_decompose: requires k = 1");
  auto terms = gen_birkhoff_decompose(m);
  detail::caratheodory_reduce(terms, 1);
  TupleMatrix check(m.n(), 1);
  for (const auto& t : terms) check = check + t.weight * induced_perm_matrix(t.sigma, 1);
  if (!(check == m)) throw std::logic_error("reduced Birkhoff decomposition does not re-sum");
  return terms;
}

/// f(sigma) = sum_alpha b(alpha, sigma(alpha)).
inline GroupFunction represented_function(const TupleMatrix& b) {
  const auto& ctx = detail::group_context(b.n());
  auto f = GroupFunction::zero(b.n());
  for (std::size_t s = 0; s < ctx.perms.size(); ++s) {
    Rational v = 0;
    for (std::size_t r = 0; r < b.size(); ++r) {
      std::vector<int> img;
      for (int a : b.tuples()[r]) img.push_back(ctx.perms[s](a));
      const auto& e = b(r, b.index_of(img));
      if (e != 0) v += e;
    }
    f.values[s] = v;
  }
  return f;
}

namespace detail {

// Exact Hungarian algorithm (potentials form) for a square cost matrix.
// Returns row and column potentials u, v with u_i + v_j <= a_ij and
// sum u + sum v = the minimum assignment cost.
inline std::pair<std::vector<Rational>, std::vector<Rational>> assignment_duals(const Matrix<Rational>& a) {
  const std::size_t n = a.rows();
  Rational inf = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inf += 2 * abs(a(i, j));
  inf *= 4;
  std::vector<Rational> u(n + 1, Rational(0)), v(n + 1, Rational(0));
  std::vector<std::size_t> p(n + 1, 0), way(n + 1, 0);
  for (std::size_t i = 1; i <= n; ++i) {
    p[0] = i;
    std::size_t j0 = 0;
    std::vector<Rational> minv(n + 1, inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = p[j0];
      Rational delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const Rational cur = a(i0 - 1, j - 1) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  return {std::vector<Rational>(u.begin() + 1, u.end()), std::vector<Rational>(v.begin() + 1, v.end())};
}

}  // namespace detail

/// Farkas certificate: a weighting y of S_n with sum_s y_s f(s) > 0 and
/// sum over s with s(alpha) = beta of y_s <= 0 for every cell.
struct RepresentationCertificate {
  std::vector<Rational> y;
};

using RepresentationResult = std::variant<TupleMatrix, RepresentationCertificate>;

inline constexpr int kLinearProgramRepresentationCap = 4;

/// Nonnegative b with f = sum b(alpha, beta) 1_{T_{alpha -> beta}}.
///
/// k = 1: solve for any representing matrix A, then shift rows and columns by
/// the assignment duals of A. The shifted matrix has entries >= min f / n.
/// k >= 2 (n <= 4): a direct feasibility LP over all cells.
inline RepresentationResult nonneg_coset_representation(const GroupFunction& f, int k, const CharacterTable& table) {
  f.validate();
  const int n = f.n;
  require(k >= 1 && k < n, "nonneg_coset_representation: requires 1 <= k < n");
  require(k == 1 || n <= kLinearProgramRepresentationCap,
          "nonneg_coset_representation: k >= 2 is limited to n <= 4");
  Rational fmin = f.values[0];
  for (const auto& v : f.values) {
    require(v >= 0, "nonneg_coset_representation: f must be nonnegative");
    if (v < fmin) fmin = v;
  }
  require(is_in_vk(f, k, table), "nonneg_coset_representation: f is not in V_k");
  const auto& ctx = detail::group_context(n);
  TupleMatrix b(n, k);
  const std::size_t cells = b.size() * b.size();
  // incidence: permutation s uses cell (alpha, s(alpha))
  auto cell_of = [&](std::size_t s, std::size_t r) {
    std::vector<int> img;
    for (int a : b.tuples()[r]) img.push_back(ctx.perms[s](a));
    return r * b.size() + b.index_of(img);
  };
  if (k == 1) {
    Matrix<Rational> sys(ctx.perms.size(), cells);
    for (std::size_t s = 0; s < ctx.perms.size(); ++s)
      for (std::size_t r = 0; r < b.size(); ++r) sys(s, cell_of(s, r)) = 1;
    auto a = solve(sys, f.values);
    if (!a) throw std::logic_error("a function in V_1 has no representing matrix");
    Matrix<Rational> am(b.size(), b.size());
    for (std::size_t c = 0; c < cells; ++c) am(c / b.size(), c % b.size()) = (*a)[c];
    auto [u, v] = detail::assignment_duals(am);
    const Rational shift = fmin / n;
    for (std::size_t i = 0; i < b.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) {
        b(i, j) = am(i, j) - u[i] - v[j] + shift;
        if (b(i, j) < 0) throw std::logic_error("assignment duals left a negative entry");
      }
  } else {
    Matrix<Rational> sys(ctx.perms.size(), cells);
    for (std::size_t s = 0; s < ctx.perms.size(); ++s)
      for (std::size_t r = 0; r < b.size(); ++r) sys(s, cell_of(s, r)) = 1;
    auto res = solve_feasibility(sys, f.values);
    if (auto* cert = std::get_if<FarkasCertificate>(&res)) return RepresentationCertificate{cert->y};
    const auto& x = std::get<FeasiblePoint>(res).x;
    for (std::size_t c = 0; c < cells; ++c) b(c / b.size(), c % b.size()) = x[c];
  }
  if (!(represented_function(b) == f)) throw std::logic_error("coset representation does not re-sum");
  return b;
}

/// Writes a Boolean f in V_k as a disjoint union of k-cosets by greedy
/// peeling: the coset found through the first remaining support element is
/// removed and the search repeats.
inline std::vector<CosetLabel> boolean_peel(const GroupFunction& f, int k, const CharacterTable& table) {
  f.validate();
  const int n = f.n;
  require(n <= kSpanRankCap, "boolean_peel: requires n <= 6");
  require(k >= 1 && k < n, "boolean_peel: requires 1 <= k < n");
  for (const auto& v : f.values) require(v == 0 || v == 1, "boolean_peel: f must be 0/1 valued");
  require(is_in_vk(f, k, table), "boolean_peel: f is not in V_k");
  const auto& ctx = detail::group_context(n);
  const auto tuples = ordered_tuples(n, k);
  std::vector<bool> live(f.values.size());
  for (std::size_t i = 0; i < live.size(); ++i) live[i] = f.values[i] == 1;
  std::vector<CosetLabel> out;
  for (std::size_t first = 0; first < live.size(); ++first) {
    if (!live[first]) continue;
    const Permutation& sigma = ctx.perms[first];
    std::optional<CosetLabel> found;
    for (const auto& alpha : tuples) {
      CosetLabel label{alpha, {}};
      for (int a : alpha) label.targets.push_back(sigma(a));
      bool inside = true;
      for (std::size_t s = 0; s < ctx.perms.size() && inside; ++s)
        if (label.contains(ctx.perms[s]) && !live[s]) inside = false;
      if (inside) {
        found = std::move(label);
        break;
      }
    }
    if (!found) throw TheoremViolation("no k-coset fits inside the remaining support of a Boolean function in V_k");
    for (std::size_t s = 0; s < ctx.perms.size(); ++s)
      if (found->contains(ctx.perms[s])) live[s] = false;
    out.push_back(std::move(*found));
  }
  auto check = GroupFunction::zero(n);
  for (const auto& label : out) check = check + coset_indicator(label, n);
  if (!(check == f)) throw std::logic_error("peeled cosets do not re-sum to f");
  return out;
}

}  // namespace kint
