#pragma once

#include <functional>
#include <map>
#include <vector>

#include "kint/characters.hpp"
#include "kint/errors.hpp"
#include "kint/matrix.hpp"
#include "kint/partition.hpp"
#include "kint/permutation.hpp"
#include "kint/rational.hpp"

namespace kint {

inline constexpr int kExplicitMatrixCap = 5;

/// Eigenvalues of a class-generated Cayley graph (or a combination of them),
/// keyed by irreducible representation, iterated in decreasing lex order.
using Spectrum = std::map<Partition, Rational, std::greater<>>;

struct ConjClass {
  Partition cycle_type;
  Integer size;
  bool even = true;
  int fixed_points = 0;
};

/// Centralizer order z = prod_j j^{a_j} a_j!.
inline Integer centralizer_order(const Partition& cycle_type) {
  Integer z = 1;
  for (int j = 1; j <= cycle_type.first_row(); ++j) {
    const int a = cycle_type.multiplicity(j);
    if (a == 0) continue;
    Integer pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j), static_cast<unsigned long>(a));
    z *= pw * factorial(static_cast<unsigned>(a));
  }
  return z;
}

inline ConjClass class_info(const Partition& cycle_type) {
  require(cycle_type.n() >= 1, "class_info: empty cycle type");
  return {cycle_type, factorial(static_cast<unsigned>(cycle_type.n())) / centralizer_order(cycle_type),
          cycle_type.is_even_class(), cycle_type.multiplicity(1)};
}

/// Whether the class lies in FPF_k, the permutations with fewer than k fixed
/// points.
inline bool in_fpf(const Partition& cycle_type, int k) { return cycle_type.multiplicity(1) < k; }

inline std::vector<Partition> fpf_classes(int n, int k) {
  std::vector<Partition> out;
  for (auto& p : enumerate_partitions(n))
    if (in_fpf(p, k)) out.push_back(std::move(p));
  return out;
}

/// |X| chi_rep(X) / dim(rep): the eigenvalue of Cay(S_n, X) on the rep-isotypic
/// component.
inline Rational cayley_eigenvalue(const Partition& generating_type, const Partition& rep,
                                  const CharacterTable& table) {
  require_same_n(generating_type, rep);
  return ratio(class_info(generating_type).size * table.value(rep, generating_type), dim_irrep(rep));
}

inline Spectrum class_spectrum(const Partition& generating_type, const CharacterTable& table) {
  Spectrum s;
  for (const auto& rep : table.order()) s.emplace(rep, cayley_eigenvalue(generating_type, rep, table));
  return s;
}

/// Spectrum of Gamma_k, the Cayley graph generated by all of FPF_k.
inline Spectrum fpf_spectrum(int n, int k, const CharacterTable& table) {
  require(n >= 2 && table.n() == n, "fpf_spectrum: requires n >= 2 and a table for n");
  require(k >= 1, "fpf_spectrum: k must be positive");
  Spectrum s;
  for (const auto& rep : table.order()) s.emplace(rep, Rational(0));
  for (const auto& cls : fpf_classes(n, k))
    for (auto& [rep, value] : s) value += cayley_eigenvalue(cls, rep, table);
  return s;
}

/// Number of fixed-point-free permutations of n points, by inclusion-exclusion.
inline Integer derangement_number(int n) {
  require(n >= 0, "derangement_number: n must be non-negative");
  Integer total = 0;
  const Integer nf = factorial(static_cast<unsigned>(n));
  for (int i = 0; i <= n; ++i) {
    const Integer term = nf / factorial(static_cast<unsigned>(i));
    total += (i % 2 ? -term : term);
  }
  return total;
}

/// Gamma_k eigenvalue at (n-1,1) from counting permutations by their number
/// of fixed points: (1/(n-1)) sum_{i<k} binom(n,i) d_{n-i} (i-1).
inline Rational gamma_k_second_eigenvalue_formula(int n, int k) {
  require(k >= 1 && n > 2 * k, "gamma_k_second_eigenvalue_formula: requires n > 2k");
  Integer s = 0;
  for (int i = 0; i < k; ++i)
    s += binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)) * derangement_number(n - i) * (i - 1);
  return ratio(s, n - 1);
}

struct MagnitudeCheck {
  Rational eigenvalue;
  Rational lhs;  // eigenvalue^2 dim^2
  Integer rhs;   // n! |X|
  bool holds = false;
};

/// Squared form of |lambda| <= sqrt(|G| |X|) / dim.
inline MagnitudeCheck eigenvalue_magnitude_bound(const Partition& generating_type, const Partition& rep,
                                                 const CharacterTable& table) {
  MagnitudeCheck c;
  c.eigenvalue = cayley_eigenvalue(generating_type, rep, table);
  const Integer d = dim_irrep(rep);
  c.lhs = c.eigenvalue * c.eigenvalue * d * d;
  c.rhs = factorial(static_cast<unsigned>(rep.n())) * class_info(generating_type).size;
  c.holds = c.lhs <= c.rhs;
  return c;
}

/// A real combination of conjugacy-class Cayley graphs, sum_j coeff_j Cay(S_n, X_j).
struct WeightedClassCombo {
  int n = 0;
  int k = 0;
  std::vector<std::pair<Partition, Rational>> terms;
};

inline Spectrum combo_spectrum(const WeightedClassCombo& combo, const CharacterTable& table) {
  require(table.n() == combo.n, "combo_spectrum: table size mismatch");
  Spectrum s;
  for (const auto& rep : table.order()) s.emplace(rep, Rational(0));
  for (const auto& [cls, coeff] : combo.terms)
    for (auto& [rep, value] : s) value += coeff * cayley_eigenvalue(cls, rep, table);
  return s;
}

/// Explicit n! x n! pseudo-adjacency matrix of a combination, indexed by
/// Lehmer rank: A[s][t] = coefficient of the class containing s t^{-1}.
inline Matrix<Rational> explicit_pseudo_adjacency(const WeightedClassCombo& combo) {
  require(combo.n >= 1 && combo.n <= kExplicitMatrixCap, "explicit matrices are capped at n <= 5");
  std::map<Partition, Rational> weight;
  for (const auto& [cls, coeff] : combo.terms) weight[cls] += coeff;
  const auto perms = all_permutations(combo.n);
  Matrix<Rational> a(perms.size(), perms.size());
  for (std::size_t t = 0; t < perms.size(); ++t) {
    const Permutation tinv = perms[t].inverse();
    for (std::size_t s = 0; s < perms.size(); ++s)
      if (auto it = weight.find((perms[s] * tinv).cycle_type()); it != weight.end()) a(s, t) = it->second;
  }
  return a;
}

struct MomentCheck {
  Rational trace;     // trace(A^m) from the explicit matrix
  Rational spectral;  // sum over reps of dim^2 lambda^m
  bool holds = false;
};

/// trace(A^m) == sum_rho dim(rho)^2 lambda_rho^m, with A built explicitly.
inline MomentCheck moment_check(const WeightedClassCombo& combo, int m, const CharacterTable& table) {
  require(m >= 0 && m <= 4, "moment_check: m must be in [0, 4]");
  const Matrix<Rational> a = explicit_pseudo_adjacency(combo);
  // Scale to integers so the powers stay in Z.
  Integer den = 1;
  for (const auto& [cls, coeff] : combo.terms) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), coeff.get_den_mpz_t());
  Matrix<Integer> ai(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) {
      const Rational v = a(r, c) * den;
      ai(r, c) = v.get_num();
    }
  Matrix<Integer> power = Matrix<Integer>::identity(a.rows());
  for (int i = 0; i < m; ++i) power = power * ai;
  Integer tr = 0;
  for (std::size_t i = 0; i < power.rows(); ++i) tr += power(i, i);
  Integer scale;
  mpz_pow_ui(scale.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(m));
  MomentCheck c;
  c.trace = ratio(tr, scale);
  c.spectral = 0;
  for (const auto& [rep, lambda] : combo_spectrum(combo, table)) {
    Rational pw = 1;
    for (int i = 0; i < m; ++i) pw *= lambda;
    const Integer d = dim_irrep(rep);
    c.spectral += pw * d * d;
  }
  c.holds = c.trace == c.spectral;
  return c;
}

}  // namespace kint
