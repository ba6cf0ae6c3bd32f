#pragma once

#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "kint/errors.hpp"
#include "kint/matrix.hpp"
#include "kint/rational.hpp"

namespace kint {

/// x >= 0 with A x = b.
struct FeasiblePoint {
  std::vector<Rational> x;
};

/// Farkas certificate for {A x = b, x >= 0} being empty: A^t y <= 0 and
/// b.y > 0, so y.(A x) <= 0 < y.b for every x >= 0.
struct FarkasCertificate {
  std::vector<Rational> y;
};

using FeasibilityResult = std::variant<FeasiblePoint, FarkasCertificate>;

inline bool verify_farkas(const Matrix<Rational>& a, const std::vector<Rational>& b,
                          const std::vector<Rational>& y) {
  if (y.size() != a.rows()) return false;
  Rational by = 0;
  for (std::size_t i = 0; i < b.size(); ++i) by += b[i] * y[i];
  if (by <= 0) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, j) != 0) s += a(i, j) * y[i];
    if (s > 0) return false;
  }
  return true;
}

/// Decides {A x = b, x >= 0} exactly with a phase-1 simplex.
///
/// Starts from an all-artificial basis after flipping rows to make b >= 0,
/// minimizes the artificial sum, and pivots with Bland's smallest-index rule
/// so the method terminates. On a positive optimum the phase-1 duals are the
/// certificate; both outcomes are re-verified before returning.
inline FeasibilityResult solve_feasibility(const Matrix<Rational>& a, const std::vector<Rational>& b) {
  require(b.size() == a.rows(), "solve_feasibility: right-hand side has wrong length");
  const std::size_t m = a.rows(), n = a.cols(), width = n + m + 1;
  std::vector<int> flip(m, 1);
  Matrix<Rational> t(m, width);
  for (std::size_t i = 0; i < m; ++i) {
    if (b[i] < 0) flip[i] = -1;
    for (std::size_t j = 0; j < n; ++j) t(i, j) = flip[i] * a(i, j);
    t(i, n + i) = 1;
    t(i, width - 1) = flip[i] * b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;
  auto cost = [&](std::size_t j) { return j >= n && j < n + m ? 1 : 0; };

  for (;;) {
    // reduced cost r_j = c_j - sum_i c_{B_i} T_ij, first negative one enters
    std::optional<std::size_t> enter;
    for (std::size_t j = 0; j + 1 < width && !enter; ++j) {
      Rational r = cost(j);
      for (std::size_t i = 0; i < m; ++i)
        if (cost(basis[i]) && t(i, j) != 0) r -= t(i, j);
      if (r < 0) enter = j;
    }
    if (!enter) break;
    const std::size_t e = *enter;
    std::optional<std::size_t> leave;
    Rational best;
    for (std::size_t i = 0; i < m; ++i) {
      if (t(i, e) <= 0) continue;
      Rational ratio_i = t(i, width - 1) / t(i, e);
      if (!leave || ratio_i < best || (ratio_i == best && basis[i] < basis[*leave])) {
        leave = i;
        best = ratio_i;
      }
    }
    if (!leave) throw std::logic_error("phase-1 simplex is unbounded");
    const std::size_t l = *leave;
    const Rational inv = 1 / t(l, e);
    for (std::size_t j = 0; j < width; ++j)
      if (t(l, j) != 0) t(l, j) *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == l || t(i, e) == 0) continue;
      const Rational f = t(i, e);
      for (std::size_t j = 0; j < width; ++j)
        if (t(l, j) != 0) t(i, j) -= f * t(l, j);
    }
    basis[l] = e;
  }

  Rational objective = 0;
  for (std::size_t i = 0; i < m; ++i)
    if (cost(basis[i])) objective += t(i, width - 1);

  if (objective == 0) {
    FeasiblePoint p{std::vector<Rational>(n, Rational(0))};
    for (std::size_t i = 0; i < m; ++i)
      if (basis[i] < n) p.x[basis[i]] = t(i, width - 1);
    for (std::size_t i = 0; i < m; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += a(i, j) * p.x[j];
      if (s != b[i]) throw std::logic_error("phase-1 simplex returned an infeasible point");
    }
    return p;
  }

  // y = c_B^t B^{-1}; B^{-1} sits in the artificial columns.
  FarkasCertificate cert{std::vector<Rational>(m, Rational(0))};
  for (std::size_t col = 0; col < m; ++col) {
    Rational y = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (cost(basis[i])) y += t(i, n + col);
    cert.y[col] = flip[col] * y;
  }
  if (!verify_farkas(a, b, cert.y)) throw std::logic_error("phase-1 simplex produced an invalid certificate");
  return cert;
}

/// Mixed system over free variables x: E x = e, G x >= g.
struct MixedSystem {
  Matrix<Rational> eq;
  std::vector<Rational> eq_rhs;
  Matrix<Rational> ge;
  std::vector<Rational> ge_rhs;
};

/// Infeasibility certificate for a MixedSystem: multipliers u (free) on the
/// equalities and v >= 0 on the inequalities with E^t u + G^t v = 0 and
/// e.u + g.v > 0.
struct MixedCertificate {
  std::vector<Rational> eq_multipliers;
  std::vector<Rational> ge_multipliers;
};

using MixedResult = std::variant<std::vector<Rational>, MixedCertificate>;

inline bool verify_mixed_certificate(const MixedSystem& s, const MixedCertificate& c) {
  const std::size_t nv = s.eq.rows() ? s.eq.cols() : s.ge.cols();
  if (c.eq_multipliers.size() != s.eq.rows() || c.ge_multipliers.size() != s.ge.rows()) return false;
  Rational rhs = 0;
  for (std::size_t i = 0; i < s.eq.rows(); ++i) rhs += s.eq_rhs[i] * c.eq_multipliers[i];
  for (std::size_t i = 0; i < s.ge.rows(); ++i) {
    if (c.ge_multipliers[i] < 0) return false;
    rhs += s.ge_rhs[i] * c.ge_multipliers[i];
  }
  if (rhs <= 0) return false;
  for (std::size_t j = 0; j < nv; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < s.eq.rows(); ++i) col += s.eq(i, j) * c.eq_multipliers[i];
    for (std::size_t i = 0; i < s.ge.rows(); ++i) col += s.ge(i, j) * c.ge_multipliers[i];
    if (col != 0) return false;
  }
  return true;
}

/// Reduces a MixedSystem to standard form (x = x+ - x-, one surplus per
/// inequality) and decides it with solve_feasibility.
inline MixedResult solve_mixed(const MixedSystem& s) {
  const std::size_t me = s.eq.rows(), mg = s.ge.rows();
  const std::size_t nv = me ? s.eq.cols() : s.ge.cols();
  require(!mg || s.ge.cols() == nv, "solve_mixed: column count mismatch");
  Matrix<Rational> a(me + mg, 2 * nv + mg);
  std::vector<Rational> b(me + mg);
  for (std::size_t i = 0; i < me; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      a(i, j) = s.eq(i, j);
      a(i, nv + j) = -s.eq(i, j);
    }
    b[i] = s.eq_rhs[i];
  }
  for (std::size_t i = 0; i < mg; ++i) {
    for (std::size_t j = 0; j < nv; ++j) {
      a(me + i, j) = s.ge(i, j);
      a(me + i, nv + j) = -s.ge(i, j);
    }
    a(me + i, 2 * nv + i) = -1;
    b[me + i] = s.ge_rhs[i];
  }
  auto r = solve_feasibility(a, b);
  if (auto* p = std::get_if<FeasiblePoint>(&r)) {
    std::vector<Rational> x(nv);
    for (std::size_t j = 0; j < nv; ++j) x[j] = p->x[j] - p->x[nv + j];
    return x;
  }
  const auto& y = std::get<FarkasCertificate>(r).y;
  // A^t y <= 0 on both x+ and x- columns forces E^t u + G^t v = 0; the
  // surplus columns force v >= 0.
  MixedCertificate c{std::vector<Rational>(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(me)),
                     std::vector<Rational>(y.begin() + static_cast<std::ptrdiff_t>(me), y.end())};
  if (!verify_mixed_certificate(s, c)) throw std::logic_error("mixed-system certificate failed verification");
  return c;
}

}  // namespace kint
