#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "darboux/analysis/function.hpp"
#include "darboux/analysis/integral.hpp"
#include "darboux/analysis/limits.hpp"
#include "darboux/audit.hpp"
#include "darboux/error.hpp"
#include "darboux/extension.hpp"
#include "darboux/poset.hpp"
#include "darboux/rational.hpp"
#include "darboux/real.hpp"

namespace darboux::json {

using nlohmann::json;

[[noreturn]] inline void schema_fail(const std::string& where, const std::string& what) {
  fail(ErrorCode::schema_error, where + ": " + what);
}

inline const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object()) schema_fail(where, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) schema_fail(where, std::string("missing field '") + key + "'");
  return *it;
}

inline std::string string_of(const json& j, const std::string& where) {
  if (!j.is_string()) schema_fail(where, "expected a string");
  return j.get<std::string>();
}

inline Rational rational_of(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  if (!j.is_string()) schema_fail(where, "expected a rational string such as \"3/4\"");
  return parse_rational(j.get<std::string>());
}

inline Extended extended_of(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Extended(rational_of(j, where));
  return parse_extended(string_of(j, where));
}

inline json to_json(const Rational& q) { return format_rational(q); }
inline json to_json(const Extended& e) { return e.str(); }

inline json to_json(const Enclosure& e) { return {{"lo", to_json(e.lo)}, {"hi", to_json(e.hi)}}; }
inline json to_json(const Range& r) { return {{"lo", to_json(r.inf)}, {"hi", to_json(r.sup)}}; }

inline std::vector<std::string> sorted_names(const Poset& p, const Subset& s) {
  std::vector<std::string> out;
  for (Element x = s.find_first(); x != Subset::npos; x = s.find_next(x)) out.push_back(p.name(x));
  std::sort(out.begin(), out.end());
  return out;
}

inline json subset_to_json(const Poset& p, const Subset& s) { return sorted_names(p, s); }

/// {"elements": [...], "covers": [[a, b], ...]} with elements and cover
/// pairs sorted by identifier.
inline json poset_to_json(const Poset& p) {
  std::vector<std::string> elements = p.names();
  std::sort(elements.begin(), elements.end());
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, b] : p.covers()) covers.emplace_back(p.name(a), p.name(b));
  std::sort(covers.begin(), covers.end());
  json c = json::array();
  for (auto& [a, b] : covers) c.push_back({a, b});
  return {{"elements", elements}, {"covers", c}};
}

inline Poset poset_of(const json& j, const std::string& where) {
  const json& el = field(j, "elements", where);
  if (!el.is_array()) schema_fail(where + ".elements", "expected an array");
  std::vector<std::string> names;
  for (const json& e : el) names.push_back(string_of(e, where + ".elements[]"));
  std::vector<std::pair<std::string, std::string>> covers;
  if (auto it = j.find("covers"); it != j.end()) {
    if (!it->is_array()) schema_fail(where + ".covers", "expected an array");
    for (const json& c : *it) {
      if (!c.is_array() || c.size() != 2) schema_fail(where + ".covers[]", "expected a pair");
      covers.emplace_back(string_of(c[0], where + ".covers[]"), string_of(c[1], where + ".covers[]"));
    }
  }
  return make_poset(names, covers);
}

inline json assignment_to_json(const Poset& source, const Poset& target, const Assignment& f) {
  json m = json::object();
  for (Element x = 0; x < f.size(); ++x) m[source.name(x)] = target.name(f[x]);
  return m;
}

inline json map_to_json(const MonotoneMap& f) { return assignment_to_json(f.source, f.target, f.assignment); }

inline json partial_to_json(const PartialMap& psi) {
  json m = json::object();
  for (Element x = 0; x < psi.source().size(); ++x)
    if (psi.defined(x)) m[psi.source().name(x)] = psi.target().name(psi(x));
  return m;
}

/// Values of an {element: element} object as a partial assignment.
inline std::vector<std::optional<Element>> assignment_of(const json& m, const Poset& source, const Poset& target,
                                                         const std::string& where) {
  if (!m.is_object()) schema_fail(where, "expected an object of element pairs");
  std::vector<std::optional<Element>> v(source.size());
  for (auto it = m.begin(); it != m.end(); ++it)
    v[source.index_of(it.key())] = target.index_of(string_of(it.value(), where + "." + it.key()));
  return v;
}

inline Assignment total_assignment_of(const json& m, const Poset& source, const Poset& target,
                                      const std::string& where) {
  auto v = assignment_of(m, source, target, where);
  Assignment a(v.size());
  for (Element x = 0; x < v.size(); ++x) {
    if (!v[x]) schema_fail(where, "map must be total, '" + source.name(x) + "' is missing");
    a[x] = *v[x];
  }
  return a;
}

/// {"source": poset, "target": poset, "map": {x: y}}. When augment_target
/// is set the target is replaced by its augmentation first.
inline PartialMap partial_map_of(const json& j, const std::string& where, bool augment_target = false) {
  Poset source = poset_of(field(j, "source", where), where + ".source");
  Poset target = poset_of(field(j, "target", where), where + ".target");
  if (augment_target) target = augment(target).poset;
  auto v = assignment_of(field(j, "map", where), source, target, where + ".map");
  return PartialMap(std::move(source), std::move(target), std::move(v));
}

inline json report_to_json(const AuditReport& r) {
  json failures = json::array();
  for (const Witness& w : r.failures)
    failures.push_back({{"check", w.check}, {"element", w.element}, {"lhs", w.lhs}, {"rhs", w.rhs}});
  return {{"name", r.name}, {"passed", r.passed()}, {"checks", r.checks}, {"failures", failures}};
}

inline std::pair<Rational, Rational> interval_of(const json& j, const std::string& where) {
  const json& iv = field(j, "interval", where);
  if (!iv.is_array() || iv.size() != 2) schema_fail(where + ".interval", "expected [lo, hi]");
  Rational a = rational_of(iv[0], where + ".interval[0]");
  Rational b = rational_of(iv[1], where + ".interval[1]");
  if (!(a < b)) schema_fail(where + ".interval", "endpoints must increase");
  return {a, b};
}

inline std::vector<Rational> rationals_of(const json& j, const std::string& where) {
  if (!j.is_array()) schema_fail(where, "expected an array of rationals");
  std::vector<Rational> out;
  for (const json& e : j) out.push_back(rational_of(e, where + "[]"));
  return out;
}

/// Parses "name" or "name(a,b)" into the name and its arguments.
inline std::pair<std::string, std::vector<std::string>> split_call(const std::string& s) {
  auto open = s.find('(');
  if (open == std::string::npos) return {s, {}};
  if (s.back() != ')') fail(ErrorCode::parse_error, "malformed oracle name '" + s + "'");
  std::vector<std::string> args;
  std::string inner = s.substr(open + 1, s.size() - open - 2), cur;
  for (char c : inner) {
    if (c == ',') {
      args.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!inner.empty()) args.push_back(cur);
  return {s.substr(0, open), args};
}

/// A function description: {"oracle": name, ...} with the built-in family
/// identity, constant, affine(p,q), step, dirichlet, sqrt, monotone-table.
/// A bare {"breaks", "values"} object is a step function.
inline RealFunction function_of(const json& j, const std::string& where) {
  if (!j.is_object()) schema_fail(where, "expected a function description");
  std::string oracle = j.contains("oracle") ? string_of(j["oracle"], where + ".oracle") : "step";
  auto [name, args] = split_call(oracle);
  auto arg = [&, &args = args](const char* key, std::size_t pos) -> Rational {
    if (j.contains(key)) return rational_of(j[key], where + "." + key);
    if (pos < args.size()) return parse_rational(args[pos]);
    schema_fail(where, std::string("missing parameter '") + key + "'");
  };
  if (name == "step") {
    std::vector<Rational> breaks = rationals_of(field(j, "breaks", where), where + ".breaks");
    std::vector<Rational> values = rationals_of(field(j, "values", where), where + ".values");
    std::map<Rational, Rational> points;
    if (auto it = j.find("points"); it != j.end()) {
      if (!it->is_object()) schema_fail(where + ".points", "expected an object");
      for (auto p = it->begin(); p != it->end(); ++p)
        points[parse_rational(p.key())] = rational_of(p.value(), where + ".points");
    }
    return step_function(breaks, values, std::move(points));
  }
  if (name == "monotone-table") {
    const json& pts = field(j, "points", where);
    if (!pts.is_array()) schema_fail(where + ".points", "expected an array of [x, y] pairs");
    std::vector<std::pair<Rational, Rational>> table;
    for (const json& p : pts) {
      if (!p.is_array() || p.size() != 2) schema_fail(where + ".points[]", "expected [x, y]");
      table.emplace_back(rational_of(p[0], where + ".points[]"), rational_of(p[1], where + ".points[]"));
    }
    return monotone_table(table);
  }
  auto [a, b] = interval_of(j, where);
  if (name == "identity") return identity_function(a, b);
  if (name == "dirichlet") return dirichlet_function(a, b);
  if (name == "sqrt") return sqrt_function(a, b);
  if (name == "constant") return constant_function(arg("value", 0), a, b);
  if (name == "affine") return affine_function(arg("p", 0), arg("q", 1), a, b);
  schema_fail(where + ".oracle", "unknown oracle '" + oracle + "'");
}

inline json limit_to_json(const LimitResult& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"enclosure", to_json(r.enclosure)},
              {"stages_used", r.stages_used}};
  out["value"] = r.value ? json(r.value->str()) : json(nullptr);
  return out;
}

inline json integral_to_json(const IntegralResult& r) {
  json out = {{"verdict", to_string(r.verdict)},
              {"lower", to_json(r.lower)},
              {"upper", to_json(r.upper)},
              {"rounds", r.rounds},
              {"pieces", r.pieces}};
  out["value"] = r.value ? json(format_rational(*r.value)) : json(nullptr);
  return out;
}

}  // namespace darboux::json
