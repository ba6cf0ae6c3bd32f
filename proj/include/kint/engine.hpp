#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "kint/characters.hpp"
#include "kint/errors.hpp"
#include "kint/matrix.hpp"
#include "kint/partition.hpp"
#include "kint/rational.hpp"
#include "kint/simplex.hpp"
#include "kint/spectrum.hpp"

namespace kint {

/// The ratio lambda_min / lambda_1 = -(n-k)! / (n! - (n-k)!) that makes the
/// weighted Hoffman bound equal (n-k)!.
struct Omega {
  int n = 0;
  int k = 0;
  Rational value;
};

inline Omega omega(int n, int k) {
  require(k >= 1 && n > k, "omega: requires n > k >= 1");
  return {n, k, ratio(-1, falling_factorial(static_cast<unsigned>(n), static_cast<unsigned>(k)) - 1)};
}

enum class Parity { even, odd };
enum class Variant { even, odd, combined };

inline std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::even: return "even";
    case Variant::odd: return "odd";
    case Variant::combined: return "combined";
  }
  return "?";
}

inline Variant parse_variant(std::string_view s) {
  if (s == "even") return Variant::even;
  if (s == "odd") return Variant::odd;
  if (s == "combined") return Variant::combined;
  throw InvalidInput("unknown variant '" + std::string(s) + "'");
}

/// For each partition phi > (n-k, 1^k): phi itself if its class has the
/// requested parity, otherwise split(phi).
inline std::vector<Partition> choose_generators(int n, int k, Parity parity) {
  require(k >= 1 && n > 3 * k + 1, "choose_generators: requires n > 3k+1");
  auto phis = fat_list(n, k);
  phis.pop_back();
  std::vector<Partition> out;
  for (const auto& phi : phis) {
    const bool want_even = parity == Parity::even;
    Partition g = phi.is_even_class() == want_even ? phi : split(phi, k);
    if (!in_fpf(g, k) || g.is_even_class() != want_even)
      throw TheoremViolation("generator " + g.to_string() + " is not an FPF_k class of the requested parity");
    out.push_back(std::move(g));
  }
  return out;
}

struct CoefficientSolution {
  std::vector<Partition> generators;
  std::vector<Rational> coefficients;
  /// Eigenvalue at (n-k, 1^k), which the solved system does not constrain.
  Rational hook_eigenvalue;
};

/// Solves sum_j d_j lambda^{(j)}_{phi_i} = (1, omega, ..., omega) over the
/// partitions phi_i > (n-k, 1^k), then checks that the eigenvalue at
/// (n-k, 1^k) comes out equal to omega without having been imposed.
inline CoefficientSolution solve_coefficients(const CharacterTable& table, int k,
                                              const std::vector<Partition>& generators) {
  const int n = table.n();
  require(k >= 1 && n > 3 * k + 1, "solve_coefficients: requires n > 3k+1");
  auto phis = fat_list(n, k);
  const Partition hook = phis.back();
  phis.pop_back();
  require(generators.size() == phis.size(),
          "solve_coefficients: expected " + std::to_string(phis.size()) + " generators");
  const Rational w = omega(n, k).value;
  Matrix<Rational> m(phis.size(), generators.size());
  std::vector<Rational> rhs(phis.size(), w);
  rhs[0] = 1;
  for (std::size_t i = 0; i < phis.size(); ++i)
    for (std::size_t j = 0; j < generators.size(); ++j) m(i, j) = cayley_eigenvalue(generators[j], phis[i], table);
  if (rank(m) != phis.size())
    throw TheoremViolation("coefficient system is singular at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  auto d = solve(m, rhs);
  if (!d) throw TheoremViolation("coefficient system is inconsistent");
  CoefficientSolution sol{generators, std::move(*d), 0};
  for (std::size_t j = 0; j < generators.size(); ++j)
    sol.hook_eigenvalue += sol.coefficients[j] * cayley_eigenvalue(generators[j], hook, table);
  if (sol.hook_eigenvalue != w)
    throw TheoremViolation("eigenvalue at " + hook.to_string() + " is " + to_string(sol.hook_eigenvalue) +
                           ", not omega = " + to_string(w));
  return sol;
}

/// Table-1 style verdict, recomputed from the eigenvalues every time.
struct SpectrumVerdict {
  Variant variant = Variant::combined;
  Rational omega;
  bool trivial_is_one = false;
  bool fat_equal_omega = false;
  /// even: tall = omega and sign = 1; odd: tall = -omega and sign = -1;
  /// combined: tall = sign = 0.
  bool tall_matches = false;
  bool medium_strictly_smaller = false;
  bool omega_is_min = false;
  bool omega_is_second_largest_abs = false;
  Rational min_eigenvalue;
  Rational max_medium_abs;
  /// max medium |lambda| / |omega|; the asymptotic envelope is reported, not asserted
  Rational medium_ratio;

  /// The exact equalities the construction guarantees at every n > 3k+1.
  bool table_equalities() const { return trivial_is_one && fat_equal_omega && tall_matches; }
  bool all_pass() const {
    const bool base = table_equalities() && medium_strictly_smaller;
    return variant == Variant::combined ? base && omega_is_min && omega_is_second_largest_abs : base;
  }
};

inline SpectrumVerdict assess_spectrum(const Spectrum& spectrum, int n, int k, Variant variant) {
  SpectrumVerdict v;
  v.variant = variant;
  v.omega = omega(n, k).value;
  const Rational abs_w = abs(v.omega);
  const Rational tall_target = variant == Variant::even ? v.omega : variant == Variant::odd ? Rational(-v.omega) : Rational(0);
  const Rational sign_target = variant == Variant::even ? 1 : variant == Variant::odd ? -1 : 0;
  v.trivial_is_one = v.fat_equal_omega = v.tall_matches = true;
  v.omega_is_second_largest_abs = true;
  v.max_medium_abs = 0;
  bool first = true;
  for (const auto& [rep, lambda] : spectrum) {
    if (first || lambda < v.min_eigenvalue) v.min_eigenvalue = lambda;
    first = false;
    switch (classify(rep, k)) {
      case PartitionClass::trivial: v.trivial_is_one = lambda == 1; break;
      case PartitionClass::fat: v.fat_equal_omega = v.fat_equal_omega && lambda == v.omega; break;
      case PartitionClass::sign: v.tall_matches = v.tall_matches && lambda == sign_target; break;
      case PartitionClass::tall: v.tall_matches = v.tall_matches && lambda == tall_target; break;
      case PartitionClass::medium:
        if (abs(lambda) > v.max_medium_abs) v.max_medium_abs = abs(lambda);
        break;
    }
    if (classify(rep, k) != PartitionClass::trivial && abs(lambda) > abs_w) v.omega_is_second_largest_abs = false;
  }
  v.medium_strictly_smaller = v.max_medium_abs < abs_w;
  v.medium_ratio = v.max_medium_abs / abs_w;
  v.omega_is_min = v.min_eigenvalue == v.omega;
  return v;
}

struct YConstruction {
  Variant variant = Variant::combined;
  std::vector<CoefficientSolution> parts;  // one per parity used
  WeightedClassCombo combo;
  Spectrum spectrum;
  SpectrumVerdict verdict;
  /// max_j |d_j| (n-1)!, tracked across n for the coefficient bound
  Rational coefficient_scale;
};

/// Builds Y_even, Y_odd or Y = (Y_even + Y_odd)/2 and checks the Table-1
/// equalities; a failing equality is a TheoremViolation.
inline YConstruction build_y(const CharacterTable& table, int k, Variant variant) {
  const int n = table.n();
  require(k >= 1 && n > 3 * k + 1, "build_y: requires n > 3k+1");
  YConstruction y;
  y.variant = variant;
  y.combo = {n, k, {}};
  std::vector<Parity> parities;
  if (variant != Variant::odd) parities.push_back(Parity::even);
  if (variant != Variant::even) parities.push_back(Parity::odd);
  const Rational scale = variant == Variant::combined ? Rational(1, 2) : Rational(1);
  y.coefficient_scale = 0;
  const Integer nm1 = factorial(static_cast<unsigned>(n - 1));
  for (Parity p : parities) {
    auto sol = solve_coefficients(table, k, choose_generators(n, k, p));
    for (std::size_t j = 0; j < sol.generators.size(); ++j) {
      y.combo.terms.emplace_back(sol.generators[j], scale * sol.coefficients[j]);
      const Rational s = abs(sol.coefficients[j]) * nm1;
      if (s > y.coefficient_scale) y.coefficient_scale = s;
    }
    y.parts.push_back(std::move(sol));
  }
  y.spectrum = combo_spectrum(y.combo, table);
  y.verdict = assess_spectrum(y.spectrum, n, k, variant);
  if (!y.verdict.table_equalities())
    throw TheoremViolation("Y (" + std::string(to_string(variant)) + ") misses an exact eigenvalue at n=" +
                           std::to_string(n) + ", k=" + std::to_string(k));
  return y;
}

/// Weighted Hoffman bound on |I|/|V|: -lambda_min / (lambda_1 - lambda_min).
inline Rational hoffman_ratio(const Rational& lambda1, const Rational& lambda_min) {
  require(lambda_min < 0 && lambda1 > 0, "hoffman_ratio: requires lambda_min < 0 < lambda1");
  return -lambda_min / (lambda1 - lambda_min);
}

/// Cross-independent bound on sqrt(|I||J|)/|V|: |lambda_2| / (lambda_1 + |lambda_2|).
inline Rational cross_ratio(const Rational& lambda1, const Rational& lambda2_abs) {
  require(lambda2_abs >= 0 && lambda1 > 0, "cross_ratio: requires lambda1 > 0 <= |lambda2|");
  return lambda2_abs / (lambda1 + lambda2_abs);
}

/// Per-partition multipliers proving that no combination works.
struct ProbeCertificate {
  std::vector<std::pair<Partition, Rational>> multipliers;  // free sign on equality rows, >= 0 otherwise
  Rational gap;  // value of the combined right-hand side, > 0
};

struct ProbeResult {
  int n = 0;
  int k = 0;
  std::vector<Partition> classes;  // all of FPF_k
  std::optional<WeightedClassCombo> witness;
  std::optional<Spectrum> witness_spectrum;
  std::optional<ProbeCertificate> certificate;
  bool feasible() const { return witness.has_value(); }
};

/// Exact LP decision: are there real coefficients on the FPF_k classes with
/// lambda_(n) = 1, lambda = omega on every fat partition other than (n), and
/// lambda >= omega everywhere else?
inline ProbeResult feasibility_probe(const CharacterTable& table, int k) {
  const int n = table.n();
  require(k >= 1 && n > 2 * k, "feasibility_probe: requires n > 2k");
  ProbeResult r{n, k, fpf_classes(n, k), {}, {}, {}};
  const Rational w = omega(n, k).value;
  std::vector<Partition> eq_reps, ge_reps;
  for (const auto& rep : table.order()) {
    const auto c = classify(rep, k);
    (c == PartitionClass::trivial || c == PartitionClass::fat ? eq_reps : ge_reps).push_back(rep);
  }
  MixedSystem sys{Matrix<Rational>(eq_reps.size(), r.classes.size()), {}, Matrix<Rational>(ge_reps.size(), r.classes.size()), {}};
  for (std::size_t i = 0; i < eq_reps.size(); ++i) {
    for (std::size_t j = 0; j < r.classes.size(); ++j) sys.eq(i, j) = cayley_eigenvalue(r.classes[j], eq_reps[i], table);
    sys.eq_rhs.push_back(i == 0 ? Rational(1) : w);
  }
  for (std::size_t i = 0; i < ge_reps.size(); ++i) {
    for (std::size_t j = 0; j < r.classes.size(); ++j) sys.ge(i, j) = cayley_eigenvalue(r.classes[j], ge_reps[i], table);
    sys.ge_rhs.push_back(w);
  }
  auto res = solve_mixed(sys);
  if (auto* x = std::get_if<std::vector<Rational>>(&res)) {
    WeightedClassCombo combo{n, k, {}};
    for (std::size_t j = 0; j < r.classes.size(); ++j)
      if ((*x)[j] != 0) combo.terms.emplace_back(r.classes[j], (*x)[j]);
    auto spec = combo_spectrum(combo, table);
    for (const auto& [rep, lambda] : spec) {
      const auto c = classify(rep, k);
      const bool ok = c == PartitionClass::trivial ? lambda == 1 : c == PartitionClass::fat ? lambda == w : lambda >= w;
      if (!ok) throw std::logic_error("probe witness violates constraint at " + rep.to_string());
    }
    r.witness = std::move(combo);
    r.witness_spectrum = std::move(spec);
    return r;
  }
  const auto& cert = std::get<MixedCertificate>(res);
  ProbeCertificate pc;
  pc.gap = 0;
  for (std::size_t i = 0; i < eq_reps.size(); ++i) {
    pc.multipliers.emplace_back(eq_reps[i], cert.eq_multipliers[i]);
    pc.gap += cert.eq_multipliers[i] * sys.eq_rhs[i];
  }
  for (std::size_t i = 0; i < ge_reps.size(); ++i) {
    pc.multipliers.emplace_back(ge_reps[i], cert.ge_multipliers[i]);
    pc.gap += cert.ge_multipliers[i] * sys.ge_rhs[i];
  }
  r.certificate = std::move(pc);
  return r;
}

}  // namespace kint
