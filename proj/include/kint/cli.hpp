#pragma once

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "kint/birkhoff.hpp"
#include "kint/characters.hpp"
#include "kint/engine.hpp"
#include "kint/errors.hpp"
#include "kint/extremal.hpp"
#include "kint/group_algebra.hpp"
#include "kint/json_io.hpp"
#include "kint/spectrum.hpp"

namespace kint::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kViolation = 2 };

inline constexpr int kEngineCap = 14;

/// Caps after applying SNSPEC_MAX_N, which can lower but never raise them.
struct Caps {
  int chartab = kDefaultTableCap;
  int engine = kEngineCap;
  int group_algebra = kGroupAlgebraCap;
  int explicit_matrix = kExplicitMatrixCap;

  static Caps from_environment() {
    Caps c;
    const char* env = std::getenv("SNSPEC_MAX_N");
    if (!env || !*env) return c;
    int limit = 0;
    try {
      std::size_t used = 0;
      limit = std::stoi(env, &used);
      require(used == std::string(env).size(), "");
    } catch (const std::exception&) {
      throw InvalidInput("SNSPEC_MAX_N must be a positive integer");
    }
    require(limit >= 1, "SNSPEC_MAX_N must be a positive integer");
    for (int* cap : {&c.chartab, &c.engine, &c.group_algebra, &c.explicit_matrix}) *cap = std::min(*cap, limit);
    return c;
  }
};

inline void check_cap(int n, int cap, const std::string& what) {
  require(n >= 1, what + ": n must be positive");
  require(n <= cap, what + ": n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(cap));
}

inline io::Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  require(static_cast<bool>(in), "cannot open " + path);
  try {
    return io::Json::parse(in);
  } catch (const io::Json::parse_error& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

inline std::string csv_escape(const std::string& s) { return "\"" + s + "\""; }

struct Context {
  std::ostream& out;
  Caps caps;
};

// ---- subcommand handlers -------------------------------------------------

inline int run_chartab(Context& ctx, int n, const std::string& format) {
  check_cap(n, ctx.caps.chartab, "chartab");
  const auto table = character_table(n, ctx.caps.chartab);
  if (format == "csv" || format == "text") {
    const char sep = format == "csv" ? ',' : '\t';
    ctx.out << (format == "csv" ? "rep" : "rep\\class");
    for (const auto& c : table.order()) ctx.out << sep << (format == "csv" ? csv_escape(c.to_string()) : c.to_string());
    ctx.out << '\n';
    for (std::size_t r = 0; r < table.size(); ++r) {
      ctx.out << (format == "csv" ? csv_escape(table.order()[r].to_string()) : table.order()[r].to_string());
      for (std::size_t c = 0; c < table.size(); ++c) ctx.out << sep << table.at(r, c);
      ctx.out << '\n';
    }
    return kOk;
  }
  io::Json parts = io::Json::array(), rows = io::Json::array();
  for (const auto& p : table.order()) parts.push_back(io::to_json(p));
  for (std::size_t r = 0; r < table.size(); ++r) {
    io::Json row = io::Json::array();
    for (std::size_t c = 0; c < table.size(); ++c) row.push_back(io::to_json(table.at(r, c)));
    rows.push_back(std::move(row));
  }
  ctx.out << io::Json{{"n", n}, {"partitions", parts}, {"table", rows}}.dump(2) << '\n';
  return kOk;
}

inline int run_spectrum(Context& ctx, int n, const std::string& cls, std::optional<int> fpf, std::optional<int> k,
                        const std::string& format) {
  check_cap(n, ctx.caps.engine, "spectrum");
  require(cls.empty() != !fpf.has_value(), "spectrum: give exactly one of --class or --fpf");
  const auto table = shared_character_table(n);
  Spectrum s;
  io::Json generator;
  if (fpf) {
    require(*fpf >= 1 && n > 2 * *fpf, "spectrum: --fpf K requires n > 2K");
    s = fpf_spectrum(n, *fpf, *table);
    generator = io::Json{{"fpf", *fpf}};
  } else {
    const Partition c = Partition::parse(cls);
    require(c.n() == n, "spectrum: class " + cls + " is not a partition of " + std::to_string(n));
    s = class_spectrum(c, *table);
    generator = io::Json{{"class", io::to_json(c)}, {"class_size", io::to_json(class_info(c).size)}};
  }
  const int label_k = k.value_or(fpf.value_or(0));
  const bool labelled = label_k >= 1 && n >= 2 * label_k + 1;
  if (format == "csv" || format == "text") {
    const char sep = format == "csv" ? ',' : '\t';
    ctx.out << "rep" << sep << "eigenvalue" << (labelled ? std::string(1, sep) + "class" : "") << '\n';
    for (const auto& [rep, v] : s) {
      ctx.out << (format == "csv" ? csv_escape(rep.to_string()) : rep.to_string()) << sep << to_string(v);
      if (labelled) ctx.out << sep << to_string(classify(rep, label_k));
      ctx.out << '\n';
    }
    return kOk;
  }
  io::Json eig = io::Json::array();
  for (const auto& [rep, v] : s) {
    io::Json e{{"rep", io::to_json(rep)}, {"value", io::to_json(v)}};
    if (labelled) e["class"] = std::string(to_string(classify(rep, label_k)));
    eig.push_back(std::move(e));
  }
  ctx.out << io::Json{{"n", n}, {"generator", generator}, {"eigenvalues", eig}}.dump(2) << '\n';
  return kOk;
}

inline int run_build_y(Context& ctx, int n, int k, const std::string& variant) {
  check_cap(n, ctx.caps.engine, "build-y");
  require(k >= 1 && n > 3 * k + 1, "build-y: requires n > 3k+1");
  const auto y = build_y(*shared_character_table(n), k, parse_variant(variant));
  io::Json parts = io::Json::array();
  for (const auto& p : y.parts) {
    io::Json gens = io::Json::array(), coeffs = io::Json::array();
    for (const auto& g : p.generators) gens.push_back(io::to_json(g));
    for (const auto& d : p.coefficients) coeffs.push_back(io::to_json(d));
    parts.push_back(io::Json{{"generators", gens}, {"coefficients", coeffs}, {"hook_eigenvalue", io::to_json(p.hook_eigenvalue)}});
  }
  io::Json generators = io::Json::array(), coefficients = io::Json::array();
  for (const auto& [cls, coeff] : y.combo.terms) {
    generators.push_back(io::to_json(cls));
    coefficients.push_back(io::to_json(coeff));
  }
  io::Json spectrum = io::Json::array();
  for (const auto& [rep, v] : y.spectrum)
    spectrum.push_back(io::Json{{"rep", io::to_json(rep)}, {"value", io::to_json(v)}, {"class", std::string(to_string(classify(rep, k)))}});
  ctx.out << io::Json{{"n", n},
                      {"k", k},
                      {"variant", variant},
                      {"generators", generators},
                      {"coefficients", coefficients},
                      {"parts", parts},
                      {"coefficient_scale", io::to_json(y.coefficient_scale)},
                      {"spectrum", spectrum},
                      {"verdict", io::to_json(y.verdict)}}
                 .dump(2)
          << '\n';
  return kOk;
}

inline int run_probe(Context& ctx, int n, int k) {
  check_cap(n, ctx.caps.engine, "probe");
  require(k >= 1 && n > 2 * k, "probe: requires n > 2k");
  const auto r = feasibility_probe(*shared_character_table(n), k);
  io::Json j{{"n", n}, {"k", k}, {"omega", io::to_json(omega(n, k).value)}, {"result", r.feasible() ? "feasible" : "infeasible"}};
  if (r.feasible()) {
    j["witness"] = io::to_json(*r.witness);
    j["witness_spectrum"] = io::to_json(*r.witness_spectrum);
  } else {
    io::Json m = io::Json::array();
    for (const auto& [rep, y] : r.certificate->multipliers) m.push_back(io::Json{{"rep", io::to_json(rep)}, {"multiplier", io::to_json(y)}});
    j["certificate"] = io::Json{{"multipliers", m}, {"gap", io::to_json(r.certificate->gap)}};
  }
  ctx.out << j.dump(2) << '\n';
  return kOk;
}

inline int run_hoffman(Context& ctx, int n, int k, bool cross) {
  require(k >= 1 && k < n && n <= 20, "hoffman: requires 1 <= k < n <= 20");
  const Rational w = omega(n, k).value;
  const Rational r = hoffman_ratio(1, w);
  const Integer nf = factorial(static_cast<unsigned>(n));
  io::Json j{{"n", n}, {"k", k}, {"omega", io::to_json(w)}, {"ratio", io::to_json(r)}, {"bound", io::to_json(Rational(r * nf))}};
  if (cross) {
    const Rational c = cross_ratio(1, abs(w));
    j["cross_ratio"] = io::to_json(c);
    j["cross_product_bound"] = io::to_json(Rational(c * nf * c * nf));
  }
  // the bound is certified when a designed Y reaches minimum eigenvalue omega
  bool certified = false;
  std::string basis = "no designed Y at this size";
  if (n > 3 * k + 1 && n <= ctx.caps.engine) {
    const auto y = build_y(*shared_character_table(n), k, Variant::combined);
    certified = y.verdict.omega_is_min && (!cross || y.verdict.omega_is_second_largest_abs);
    basis = certified ? "combined Y attains the required spectrum" : "combined Y does not yet separate medium eigenvalues";
  }
  j["certified"] = certified;
  j["basis"] = basis;
  ctx.out << j.dump(2) << '\n';
  return kOk;
}

inline int run_vk(Context& ctx, int n, int k, bool check_rank, const std::string& input) {
  require(check_rank || !input.empty(), "vk: give --check-rank and/or --input");
  io::Json j{{"n", n}, {"k", k}};
  int code = kOk;
  if (check_rank) {
    check_cap(n, std::min(ctx.caps.group_algebra, kSpanRankCap), "vk --check-rank");
    const auto r = coset_span_rank(n, k);
    j["cosets"] = r.cosets;
    j["rank"] = r.rank;
    j["expected"] = io::to_json(r.expected);
    j["exact"] = r.exact;
    j["matches"] = r.matches();
    if (!r.matches()) code = kViolation;
  }
  if (!input.empty()) {
    const auto f = io::group_function_from_json(read_json_file(input));
    require(f.n == n, "vk: input function is on S_" + std::to_string(f.n));
    check_cap(n, ctx.caps.group_algebra, "vk --input");
    const auto table = shared_character_table(n);
    io::Json support = io::Json::array();
    for (const auto& p : fourier_support(f, *table)) support.push_back(io::to_json(p));
    j["support"] = support;
    j["in_vk"] = is_in_vk(f, k, *table);
  }
  ctx.out << j.dump(2) << '\n';
  return code;
}

inline int run_peel(Context& ctx, int n, int k, const std::string& input) {
  const auto f = io::group_function_from_json(read_json_file(input));
  require(f.n == n, "peel: input function is on S_" + std::to_string(f.n));
  check_cap(n, std::min(ctx.caps.group_algebra, kSpanRankCap), "peel");
  const auto labels = boolean_peel(f, k, *shared_character_table(n));
  io::Json a = io::Json::array();
  for (const auto& l : labels) a.push_back(io::to_json(l));
  ctx.out << io::Json{{"n", n}, {"k", k}, {"cosets", a}}.dump(2) << '\n';
  return kOk;
}

inline int run_birkhoff(Context& ctx, const std::string& input, bool check, bool decompose) {
  require(check != decompose, "birkhoff: give exactly one of --check or --decompose");
  const auto m = io::tuple_matrix_from_json(read_json_file(input));
  check_cap(m.n(), ctx.caps.group_algebra, "birkhoff");
  io::Json j{{"n", m.n()}, {"k", m.k()}};
  if (check) {
    const auto v = is_k_bistochastic(m);
    j["k_bistochastic"] = v.ok;
    if (!v.ok) j["reason"] = v.reason;
  } else {
    const auto terms = m.k() == 1 ? birkhoff_decompose(m) : gen_birkhoff_decompose(m);
    io::Json a = io::Json::array();
    for (const auto& t : terms) a.push_back(io::Json{{"weight", io::to_json(t.weight)}, {"permutation", io::to_json(t.sigma)}});
    j["terms"] = a;
  }
  ctx.out << j.dump(2) << '\n';
  return kOk;
}

inline int run_search(Context& ctx, int n, int k, bool all, bool reduce) {
  const auto r = max_k_intersecting(n, k, all, reduce);
  io::Json fams = io::Json::array();
  for (const auto& f : r.extremal_families) fams.push_back(io::family_to_json(f));
  ctx.out << io::Json{{"n", n},
                      {"k", k},
                      {"max_size", r.max_size},
                      {"hoffman_bound", r.hoffman_bound},
                      {"target", io::to_json(factorial(static_cast<unsigned>(n - k)))},
                      {"symmetry_reduced", r.symmetry_reduced},
                      {"all_extremal", all},
                      {"family_count", r.extremal_families.size()},
                      {"all_are_cosets", r.all_are_cosets},
                      {"extremal_families", fams}}
                 .dump(2)
          << '\n';
  return kOk;
}

inline int run_certify(Context& ctx, const std::string& mode, std::optional<int> n, std::optional<int> q) {
  SharplyTransitiveCertificate c;
  if (mode == "cyclic") {
    require(n.has_value() && !q, "certify --mode cyclic takes --n");
    c = cyclic_certificate(*n);
  } else if (mode == "affine") {
    require(q.has_value() && !n, "certify --mode affine takes --q");
    c = affine_certificate(*q);
  } else {
    throw InvalidInput("certify: unknown mode '" + mode + "'");
  }
  io::Json group = io::Json::array();
  for (const auto& g : c.group) group.push_back(io::to_json(g));
  ctx.out << io::Json{{"mode", mode},
                      {"n", c.n},
                      {"group_order", c.group.size()},
                      {"group", group},
                      {"cells", c.cells.size()},
                      {"max_agreement_within_cells", c.max_agreement},
                      {"verified", c.verified}}
                 .dump(2)
          << '\n';
  return c.verified ? kOk : kViolation;
}

// ---- dispatch -------------------------------------------------------------

/// Runs one command. args excludes the program name.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact tools for k-intersecting families of permutations", "kint"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for all subcommands");

  int n = 0, k = 0;
  std::optional<int> opt_n, opt_k, fpf, q;
  std::string format = "json", cls, variant = "combined", input, mode;
  bool cross = false, check_rank = false, check = false, decompose = false, all = false, reduce = false;
  const std::vector<std::string> formats{"json", "csv", "text"};

  auto* chartab = app.add_subcommand("chartab", "Character table of S_n");
  chartab->add_option("--n", n, "n")->required();
  chartab->add_option("--format", format, "json, csv or text")->check(CLI::IsMember(formats));

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of a class Cayley graph or of Gamma_k");
  spectrum->add_option("--n", n, "n")->required();
  spectrum->add_option("--class", cls, "generating cycle type, e.g. 3+2");
  spectrum->add_option("--fpf", fpf, "use all classes with fewer than K fixed points");
  spectrum->add_option("--k", opt_k, "label representations as trivial/fat/medium/tall/sign for this k");
  spectrum->add_option("--format", format, "json, csv or text")->check(CLI::IsMember(formats));

  auto* build = app.add_subcommand("build-y", "Construct Y and check its spectrum");
  build->add_option("--n", n, "n")->required();
  build->add_option("--k", k, "k")->required();
  build->add_option("--variant", variant, "even, odd or combined")->check(CLI::IsMember({"even", "odd", "combined"}));

  auto* probe = app.add_subcommand("probe", "Exact LP feasibility of the eigenvalue design");
  probe->add_option("--n", n, "n")->required();
  probe->add_option("--k", k, "k")->required();

  auto* hoffman = app.add_subcommand("hoffman", "Weighted Hoffman bound at ratio omega");
  hoffman->add_option("--n", n, "n")->required();
  hoffman->add_option("--k", k, "k")->required();
  hoffman->add_flag("--cross", cross, "also report the cross-intersecting bound");

  auto* vk = app.add_subcommand("vk", "Span of k-cosets and V_k membership");
  vk->add_option("--n", n, "n")->required();
  vk->add_option("--k", k, "k")->required();
  vk->add_flag("--check-rank", check_rank, "compare the coset span rank with the sum of dim^2");
  vk->add_option("--input", input, "group function JSON to test for membership");

  auto* peel = app.add_subcommand("peel", "Split a Boolean function in V_k into disjoint k-cosets");
  peel->add_option("--n", n, "n")->required();
  peel->add_option("--k", k, "k")->required();
  peel->add_option("--input", input, "group function JSON")->required();

  auto* birkhoff = app.add_subcommand("birkhoff", "k-bistochastic check or decomposition");
  birkhoff->add_option("--input", input, "tuple matrix JSON")->required();
  birkhoff->add_flag("--check", check, "test k-bistochasticity");
  birkhoff->add_flag("--decompose", decompose, "decompose into induced permutation matrices");

  auto* search = app.add_subcommand("search", "Exhaustive maximum k-intersecting families");
  search->add_option("--n", n, "n")->required();
  search->add_option("--k", k, "k")->required();
  search->add_flag("--all-extremal", all, "list every maximum family");
  search->add_flag("--symmetry-reduce", reduce, "only families containing the identity");

  auto* certify = app.add_subcommand("certify", "Sharply transitive partition certificates");
  certify->add_option("--mode", mode, "cyclic or affine")->required()->check(CLI::IsMember({"cyclic", "affine"}));
  certify->add_option("--n", opt_n, "n for cyclic mode");
  certify->add_option("--q", q, "field order for affine mode");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    Context ctx{out, Caps::from_environment()};
    if (*chartab) return run_chartab(ctx, n, format);
    if (*spectrum) return run_spectrum(ctx, n, cls, fpf, opt_k, format);
    if (*build) return run_build_y(ctx, n, k, variant);
    if (*probe) return run_probe(ctx, n, k);
    if (*hoffman) return run_hoffman(ctx, n, k, cross);
    if (*vk) return run_vk(ctx, n, k, check_rank, input);
    if (*peel) return run_peel(ctx, n, k, input);
    if (*birkhoff) return run_birkhoff(ctx, input, check, decompose);
    if (*search) return run_search(ctx, n, k, all, reduce);
    if (*certify) return run_certify(ctx, mode, opt_n, q);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const TheoremViolation& e) {
    err << "theorem violation: " << e.what() << '\n';
    return kViolation;
  }
  return kUsage;
}

}  // namespace kint::cli
