#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kint/birkhoff.hpp"
#include "kint/engine.hpp"
#include "kint/errors.hpp"
#include "kint/extremal.hpp"
#include "kint/group_algebra.hpp"
#include "kint/partition.hpp"
#include "kint/permutation.hpp"
#include "kint/rational.hpp"
#include "kint/spectrum.hpp"

namespace kint::io {

using Json = nlohmann::ordered_json;

inline Json to_json(const Rational& q) { return to_string(q); }
inline Json to_json(const Integer& z) { return to_string(z); }

inline Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw InvalidInput("expected a rational as \"p/q\" or an integer");
}

inline Json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const Json& j) {
  require(j.is_array(), "expected a partition as an array of positive integers");
  std::vector<int> parts;
  for (const auto& x : j) {
    require(x.is_number_integer(), "partition parts must be integers");
    parts.push_back(x.get<int>());
  }
  return Partition(parts);
}

/// One-based one-line notation.
inline Json to_json(const Permutation& p) {
  Json a = Json::array();
  for (int v : p.image()) a.push_back(v + 1);
  return a;
}

inline Json to_json(const CosetLabel& c) {
  Json s = Json::array(), t = Json::array();
  for (int v : c.sources) s.push_back(v + 1);
  for (int v : c.targets) t.push_back(v + 1);
  return Json{{"sources", s}, {"targets", t}};
}

inline Json to_json(const Spectrum& s) {
  Json a = Json::array();
  for (const auto& [rep, value] : s) a.push_back(Json{{"rep", to_json(rep)}, {"value", to_json(value)}});
  return a;
}

inline Json to_json(const GroupFunction& f) {
  Json v = Json::array();
  for (const auto& x : f.values) v.push_back(to_json(x));
  return Json{{"n", f.n}, {"values", v}};
}

inline GroupFunction group_function_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("values"), "group function JSON needs \"n\" and \"values\"");
  require(j["n"].is_number_integer() && j["values"].is_array(), "group function JSON: bad field types");
  GroupFunction f{j["n"].get<int>(), {}};
  require(f.n >= 1 && f.n <= kGroupAlgebraCap, "group function: n must be in [1, 7]");
  for (const auto& x : j["values"]) f.values.push_back(rational_from_json(x));
  f.validate();
  return f;
}

inline Json to_json(const TupleMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.size(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.size(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"n", m.n()}, {"k", m.k()}, {"entries", rows}};
}

inline TupleMatrix tuple_matrix_from_json(const Json& j) {
  require(j.is_object() && j.contains("n") && j.contains("k") && j.contains("entries"),
          "tuple matrix JSON needs \"n\", \"k\" and \"entries\"");
  require(j["n"].is_number_integer() && j["k"].is_number_integer() && j["entries"].is_array(),
          "tuple matrix JSON: bad field types");
  TupleMatrix m(j["n"].get<int>(), j["k"].get<int>());
  const auto& rows = j["entries"];
  require(rows.size() == m.size(), "tuple matrix JSON: expected " + std::to_string(m.size()) + " rows");
  for (std::size_t r = 0; r < m.size(); ++r) {
    require(rows[r].is_array() && rows[r].size() == m.size(), "tuple matrix JSON: ragged row");
    for (std::size_t c = 0; c < m.size(); ++c) m(r, c) = rational_from_json(rows[r][c]);
  }
  return m;
}

inline Json to_json(const WeightedClassCombo& c) {
  Json terms = Json::array();
  for (const auto& [cls, coeff] : c.terms) terms.push_back(Json{{"class", to_json(cls)}, {"coefficient", to_json(coeff)}});
  return Json{{"n", c.n}, {"k", c.k}, {"terms", terms}};
}

inline Json to_json(const SpectrumVerdict& v) {
  return Json{{"variant", std::string(to_string(v.variant))},
              {"omega", to_json(v.omega)},
              {"trivial_is_one", v.trivial_is_one},
              {"fat_equal_omega", v.fat_equal_omega},
              {"tall_matches", v.tall_matches},
              {"medium_strictly_smaller", v.medium_strictly_smaller},
              {"omega_is_min", v.omega_is_min},
              {"omega_is_second_largest_abs", v.omega_is_second_largest_abs},
              {"min_eigenvalue", to_json(v.min_eigenvalue)},
              {"max_medium_abs", to_json(v.max_medium_abs)},
              {"medium_ratio", to_json(v.medium_ratio)},
              {"all_pass", v.all_pass()}};
}

inline Json family_to_json(const Family& f) { return f; }

}  // namespace kint::io
