#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "sgr/errors.hpp"
#include "sgr/field.hpp"
#include "sgr/matrix.hpp"
#include "sgr/maya.hpp"
#include "sgr/operators.hpp"
#include "sgr/plucker.hpp"
#include "sgr/points.hpp"

/* JSON and text codecs for the library's value types.

   Shapes:
     point     { "level": 2, "field": "Q", "rows": [["1","0","0","1"], ...] }
     vector    { "level": 2, "field": "GF(2)", "coords": { "[-2,-1]": 1, ... } }
     relation  [ { "c": 1, "l": [-2,-1], "r": [0,1] }, ... ]
     operator  { "kind": "mul", "field": "Q", "unit": { "2": "1" } }
               { "kind": "band", "field": "Q", "bandwidth": 1,
                 "block": { "[-1,0]": "1" } }

   Rational entries travel as "a/b" strings (plain "a" for integers) so no
   precision is lost; GF(p) entries travel as plain JSON integers.  Readers
   accept either form for convenience.  Malformed structure raises
   parse_error; semantically invalid values (rank-deficient bases, repeated
   index elements) propagate the constructing type's own exception. */

namespace sgr {

using Json = nlohmann::json;

namespace detail {

inline long long json_to_ll(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw parse_error(std::string(what) + " must be an integer, got " + j.dump());
  return j.get<long long>();
}

inline Rational parse_rational_text(const std::string& s) {
  const std::size_t slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    boost::multiprecision::cpp_int num(s.substr(0, slash));
    boost::multiprecision::cpp_int den(s.substr(slash + 1));
    if (den == 0) throw parse_error("zero denominator in \"" + s + "\"");
    return Rational(num) / Rational(den);
  } catch (const parse_error&) {
    throw;
  } catch (const std::exception&) {
    throw parse_error("not a rational literal: \"" + s + "\"");
  }
}

inline int parse_int_text(const std::string& s, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw parse_error("");
    return v;
  } catch (const std::exception&) {
    throw parse_error(std::string(what) + ": not an integer: \"" + s + "\"");
  }
}

/* Splits "[-2,-1]" into trimmed comma-separated pieces. */
inline std::vector<std::string> split_bracket_list(const std::string& s) {
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw parse_error("expected a bracketed list, got \"" + s + "\"");
  std::vector<std::string> out;
  const std::string body = s.substr(1, s.size() - 2);
  if (body.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = body.find(',', start);
    std::string piece = body.substr(start, comma - start);
    const std::size_t a = piece.find_first_not_of(" \t");
    const std::size_t b = piece.find_last_not_of(" \t");
    if (a == std::string::npos) throw parse_error("empty entry in list \"" + s + "\"");
    out.push_back(piece.substr(a, b - a + 1));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

inline const Json& require_key(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw parse_error(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace detail

inline Field field_from_name(const std::string& name) {
  if (name == "Q") return Field::rationals();
  if (name.size() > 4 && name.rfind("GF(", 0) == 0 && name.back() == ')') {
    const std::string inner = name.substr(3, name.size() - 4);
    return Field::gf(detail::parse_int_text(inner, "GF modulus"));
  }
  throw parse_error("unknown field \"" + name + "\" (expected Q or GF(p))");
}

inline Json element_to_json(const FieldElement& e) {
  if (e.field().is_gf()) return Json(e.residue());
  return Json(e.str());
}

inline FieldElement element_from_json(Field f, const Json& j) {
  if (j.is_number_integer()) return FieldElement(f, j.get<long long>());
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (f.is_rational()) return FieldElement(f, detail::parse_rational_text(s));
    return FieldElement(f, detail::parse_int_text(s, "GF entry"));
  }
  throw parse_error("entry must be an integer or string, got " + j.dump());
}

inline std::string index_set_to_text(const FiniteIndexSet& s) {
  std::string out = "[";
  for (std::size_t k = 0; k < s.elements().size(); ++k) {
    if (k) out += ",";
    out += std::to_string(s.elements()[k]);
  }
  return out + "]";
}

inline FiniteIndexSet index_set_from_text(int level, const std::string& text) {
  std::vector<int> elems;
  for (const std::string& piece : detail::split_bracket_list(text))
    elems.push_back(detail::parse_int_text(piece, "index"));
  return FiniteIndexSet(level, std::move(elems));
}

inline Json point_to_json(const GrassPoint& p) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < p.basis().rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < p.basis().cols(); ++c)
      row.push_back(element_to_json(p.basis().at(r, c)));
    rows.push_back(std::move(row));
  }
  return Json{{"level", p.level()}, {"field", p.field().name()}, {"rows", std::move(rows)}};
}

inline GrassPoint point_from_json(const Json& j) {
  const int level = static_cast<int>(detail::json_to_ll(detail::require_key(j, "level"), "level"));
  if (level < 1) throw parse_error("level must be positive, got " + std::to_string(level));
  const Field f = field_from_name(detail::require_key(j, "field").get<std::string>());
  const Json& rows = detail::require_key(j, "rows");
  if (!rows.is_array() || rows.empty()) throw parse_error("\"rows\" must be a nonempty array");
  const std::size_t width = 2 * static_cast<std::size_t>(level);
  ExactMatrix m(f, rows.size(), width);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const Json& row = rows.at(r);
    if (!row.is_array() || row.size() != width)
      throw parse_error("row " + std::to_string(r) + " must have " + std::to_string(width) +
                        " entries");
    for (std::size_t c = 0; c < width; ++c) m.at(r, c) = element_from_json(f, row.at(c));
  }
  return GrassPoint(level, m);
}

inline Json vector_to_json(const PluckerVector& v) {
  Json coords = Json::object();
  for (const auto& [label, value] : v.coordinates())
    coords[index_set_to_text(label)] = element_to_json(value);
  return Json{{"level", v.level()}, {"field", v.field().name()}, {"coords", std::move(coords)}};
}

inline PluckerVector vector_from_json(const Json& j) {
  const int level = static_cast<int>(detail::json_to_ll(detail::require_key(j, "level"), "level"));
  const Field f = field_from_name(detail::require_key(j, "field").get<std::string>());
  const Json& coords = detail::require_key(j, "coords");
  if (!coords.is_object()) throw parse_error("\"coords\" must be an object");
  std::map<FiniteIndexSet, FieldElement> entries;
  for (const auto& [key, value] : coords.items())
    entries.emplace(index_set_from_text(level, key), element_from_json(f, value));
  return PluckerVector(level, f, std::move(entries));
}

inline std::string vector_to_text(const PluckerVector& v) {
  std::string out;
  for (const auto& [label, value] : v.coordinates()) {
    if (!out.empty()) out += "\n";
    out += "X" + index_set_to_text(label) + " = " + value.str();
  }
  return out;
}

inline std::string point_to_text(const GrassPoint& p) {
  std::string out = "level " + std::to_string(p.level()) + " field " + p.field().name() +
                    " dim " + std::to_string(p.dim());
  for (std::size_t r = 0; r < p.basis().rows(); ++r) {
    out += "\n";
    for (std::size_t c = 0; c < p.basis().cols(); ++c) {
      if (c) out += " ";
      out += p.basis().at(r, c).str();
    }
  }
  return out;
}

inline std::string relation_to_text(const QuadraticRelation& rel) {
  std::string out;
  for (std::size_t k = 0; k < rel.terms().size(); ++k) {
    const RelationTerm& t = rel.terms()[k];
    const long long mag = t.coeff < 0 ? -t.coeff : t.coeff;
    if (k == 0) {
      if (t.coeff < 0) out += "-";
    } else {
      out += t.coeff < 0 ? " - " : " + ";
    }
    if (mag != 1) out += std::to_string(mag) + "*";
    out += "X" + index_set_to_text(t.left) + "*X" + index_set_to_text(t.right);
  }
  return out;
}

inline Json relation_to_json(const QuadraticRelation& rel) {
  Json arr = Json::array();
  for (const RelationTerm& t : rel.terms())
    arr.push_back(Json{{"c", t.coeff},
                       {"l", t.left.elements()},
                       {"r", t.right.elements()}});
  return arr;
}

inline QuadraticRelation relation_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw parse_error("relation must be a nonempty array of terms");
  std::vector<RelationTerm> raw;
  int level = -1;
  for (const Json& term : j) {
    const Json& l = detail::require_key(term, "l");
    const Json& r = detail::require_key(term, "r");
    if (!l.is_array() || !r.is_array()) throw parse_error("term sides must be arrays");
    if (level < 0) level = static_cast<int>(l.size());
    std::vector<int> left, right;
    for (const Json& e : l) left.push_back(static_cast<int>(detail::json_to_ll(e, "index")));
    for (const Json& e : r) right.push_back(static_cast<int>(detail::json_to_ll(e, "index")));
    raw.push_back(RelationTerm{detail::json_to_ll(detail::require_key(term, "c"), "coefficient"),
                               FiniteIndexSet(level, std::move(left)),
                               FiniteIndexSet(level, std::move(right))});
  }
  auto rel = QuadraticRelation::canonicalize(level, std::move(raw));
  if (!rel) throw parse_error("relation terms cancel to zero");
  return *rel;
}

inline Json operator_to_json(const WindowOperator& g) {
  if (g.kind() == OperatorKind::multiplication) {
    Json unit = Json::object();
    for (const auto& [exp, c] : g.unit().coefficients())
      unit[std::to_string(exp)] = element_to_json(c);
    return Json{{"kind", "mul"}, {"field", g.field().name()}, {"unit", std::move(unit)}};
  }
  Json block = Json::object();
  for (const auto& [pos, c] : g.block())
    block["[" + std::to_string(pos.first) + "," + std::to_string(pos.second) + "]"] =
        element_to_json(c);
  return Json{{"kind", "band"},
              {"field", g.field().name()},
              {"bandwidth", g.bandwidth()},
              {"block", std::move(block)}};
}

inline WindowOperator operator_from_json(const Json& j) {
  const std::string kind = detail::require_key(j, "kind").get<std::string>();
  const Field f = field_from_name(detail::require_key(j, "field").get<std::string>());
  if (kind == "mul") {
    const Json& unit = detail::require_key(j, "unit");
    if (!unit.is_object()) throw parse_error("\"unit\" must be an object");
    std::map<int, FieldElement> coeffs;
    for (const auto& [key, value] : unit.items())
      coeffs.emplace(detail::parse_int_text(key, "exponent"), element_from_json(f, value));
    return WindowOperator::multiplication(LaurentVector(f, std::move(coeffs)));
  }
  if (kind == "band") {
    const Json& block = detail::require_key(j, "block");
    if (!block.is_object()) throw parse_error("\"block\" must be an object");
    const int bw =
        static_cast<int>(detail::json_to_ll(detail::require_key(j, "bandwidth"), "bandwidth"));
    std::map<std::pair<int, int>, FieldElement> entries;
    for (const auto& [key, value] : block.items()) {
      std::vector<std::string> parts = detail::split_bracket_list(key);
      if (parts.size() != 2) throw parse_error("block key must be \"[row,col]\", got " + key);
      entries.emplace(std::make_pair(detail::parse_int_text(parts[0], "row exponent"),
                                     detail::parse_int_text(parts[1], "column exponent")),
                      element_from_json(f, value));
    }
    return WindowOperator::banded(f, bw, std::move(entries));
  }
  throw parse_error("unknown operator kind \"" + kind + "\"");
}

}  // namespace sgr
