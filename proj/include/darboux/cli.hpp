#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "darboux.hpp"
#include "darboux/json.hpp"

namespace darboux::cli {

using nlohmann::json;
using darboux::json::field;
using darboux::json::schema_fail;

inline const std::vector<std::string>& commands() {
  static const std::vector<std::string> names{"complete", "extend",    "darboux", "aut",  "cic",
                                              "real-eval", "integrate", "limit",   "audit"};
  return names;
}

/// Budgets of a request, with per-command defaults filled in.
struct Budgets {
  std::size_t size = 0;
  std::size_t depth = 0;
  Rational epsilon;
};

inline Budgets default_budgets(const std::string& command) {
  if (command == "complete") return {1u << 16, 0, Rational(1, 1000000000)};
  if (command == "aut") return {10, 0, Rational(1, 1000000000)};
  if (command == "cic") return {4096, 0, Rational(1, 1000000000)};
  if (command == "real-eval") return {0, 256, Rational(1, 1000000000)};
  if (command == "integrate") return {0, 21, Rational(1, 1000000)};
  if (command == "limit") return {0, 4096, Rational(1, 1000)};
  if (command == "audit") return {4096, 256, Rational(1, 1000000000)};
  return {1000000, 0, Rational(1, 1000000000)};
}

inline Budgets budgets_of(const json& request, const std::string& command) {
  Budgets b = default_budgets(command);
  auto it = request.find("budgets");
  if (it == request.end()) return b;
  if (!it->is_object()) schema_fail("budgets", "expected an object");
  for (auto f = it->begin(); f != it->end(); ++f) {
    if (f.key() == "size" || f.key() == "depth") {
      if (!f.value().is_number_unsigned()) schema_fail("budgets." + f.key(), "expected a nonnegative integer");
      (f.key() == "size" ? b.size : b.depth) = f.value().get<std::size_t>();
    } else if (f.key() == "epsilon") {
      b.epsilon = darboux::json::rational_of(f.value(), "budgets.epsilon");
      if (b.epsilon <= 0) schema_fail("budgets.epsilon", "must be positive");
    } else {
      schema_fail("budgets", "unknown budget '" + f.key() + "'");
    }
  }
  return b;
}

namespace detail {

inline bool flag(const json& p, const char* key, bool fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  if (!it->is_boolean()) schema_fail(std::string("payload.") + key, "expected a boolean");
  return it->get<bool>();
}

inline std::string option(const json& p, const char* key, const std::string& fallback) {
  auto it = p.find(key);
  if (it == p.end()) return fallback;
  return darboux::json::string_of(*it, std::string("payload.") + key);
}

/// The poset of a payload: either {"poset": ...} or the payload itself.
inline Poset payload_poset(const json& p) {
  if (p.contains("poset")) return darboux::json::poset_of(p["poset"], "payload.poset");
  return darboux::json::poset_of(p, "payload");
}

inline json down_sets_json(const DownSetLattice& l, const Subset* members = nullptr,
                           const std::vector<Element>* to_parent = nullptr) {
  std::vector<std::vector<std::string>> sets;
  if (to_parent) {
    for (Element i : *to_parent) sets.push_back(darboux::json::sorted_names(l.base, l.sets[i]));
  } else {
    for (Element i = 0; i < l.sets.size(); ++i)
      if (!members || members->test(i)) sets.push_back(darboux::json::sorted_names(l.base, l.sets[i]));
  }
  std::sort(sets.begin(), sets.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return sets;
}

inline json run_complete(const json& p, const Budgets& b) {
  Poset o = payload_poset(p);
  std::string method = option(p, "method", "extension");
  if (method != "extension" && method != "closure") schema_fail("payload.method", "expected extension or closure");
  CompletionResult c = darboux_completion(
      o, method == "extension" ? CompletionMethod::extension : CompletionMethod::closure, b.size);
  json yon = json::object();
  for (Element x = 0; x < o.size(); ++x)
    yon[o.name(x)] = darboux::json::sorted_names(o, c.dar.sets[c.yoneda(x)]);
  json cuts_order = json::array();
  std::vector<std::pair<std::string, std::string>> covers;
  for (auto [a, bb] : c.dar.poset.covers()) covers.emplace_back(c.dar.poset.name(a), c.dar.poset.name(bb));
  std::sort(covers.begin(), covers.end());
  for (auto& [a, bb] : covers) cuts_order.push_back({a, bb});
  return {{"cocompletion_size", c.cocompletion.sets.size()},
          {"dar", down_sets_json(c.dar)},
          {"dar_covers", cuts_order},
          {"dar_prime", down_sets_json(c.dar, nullptr, &c.dar_prime.to_parent)},
          {"removed",
           {{"lex_empty", darboux::json::sorted_names(o, c.dar.sets[c.lex_empty])},
            {"uex_empty", darboux::json::sorted_names(o, c.dar.sets[c.uex_empty])}}},
          {"yoneda", yon},
          {"extremes_are_yoneda", c.extremes_are_yoneda},
          {"lex_is_identity", c.lex_is_identity},
          {"method", method}};
}

inline json extension_json(const PartialMap& psi) {
  ExtensionPair ex = extensions(psi);
  Subset dar = darboux_set(ex);
  Subset bounded = bounded_set(psi);
  return {{"lower", darboux::json::map_to_json(ex.lower)},
          {"upper", darboux::json::map_to_json(ex.upper)},
          {"darboux_set", darboux::json::subset_to_json(psi.source(), dar)},
          {"bounded_set", darboux::json::subset_to_json(psi.source(), bounded)},
          {"bounded_darboux_set", darboux::json::subset_to_json(psi.source(), bounded & dar)},
          {"extension", darboux::json::partial_to_json(darboux_extension(psi, ex))}};
}

inline json run_extend(const json& p, const Budgets& b) {
  PartialMap psi = darboux::json::partial_map_of(p, "payload", flag(p, "augment_target", false));
  std::string mode = option(p, "mode", "formula");
  if (mode == "formula") return extension_json(psi);
  if (mode != "general") schema_fail("payload.mode", "expected formula or general");
  EnumerationBudget eb;
  eb.max_results = b.size;
  ExtremizabilityResult r = check_extremizable_general(psi, eb);
  json out = {{"status", to_string(r.status)}, {"extension_count", r.extension_count}};
  if (r.pair) {
    out["lower"] = darboux::json::map_to_json(r.pair->lower);
    out["upper"] = darboux::json::map_to_json(r.pair->upper);
    out["darboux_set"] = darboux::json::subset_to_json(psi.source(), darboux_set(*r.pair));
  }
  return out;
}

inline json run_darboux(const json& p, const Budgets&) {
  PartialMap psi = darboux::json::partial_map_of(p, "payload", flag(p, "augment_target", false));
  json full = extension_json(psi);
  return {{"darboux_set", full["darboux_set"]},
          {"bounded_darboux_set", full["bounded_darboux_set"]},
          {"extension", full["extension"]},
          {"encompassing", is_encompassing(psi)}};
}

inline json run_aut(const json& p, const Budgets& b) {
  Poset o = payload_poset(p);
  if (flag(p, "augment", false)) o = augment(o).poset;
  json maps = json::array();
  for (const MonotoneMap& f : enumerate_automorphisms(o, b.size)) maps.push_back(darboux::json::map_to_json(f));
  return {{"count", maps.size()}, {"automorphisms", maps}};
}

inline json run_cic(const json& p, const Budgets& b) {
  Poset base = payload_poset(p);
  Poset carrier = flag(p, "augment", true) ? augment(base).poset : base;
  std::optional<AutomorphismGroup> group;
  if (auto it = p.find("generators"); it != p.end()) {
    if (!it->is_array()) schema_fail("payload.generators", "expected an array of maps");
    std::vector<Assignment> gens;
    for (const json& g : *it)
      gens.push_back(darboux::json::total_assignment_of(g, carrier, carrier, "payload.generators[]"));
    group = AutomorphismGroup::generated(carrier, gens);
  } else {
    group = AutomorphismGroup::full(carrier, 10);
  }
  GroupBdarReport r = bdar_of_group(*group, b.size);
  json members = json::array();
  for (const Assignment& f : r.members) members.push_back(darboux::json::assignment_to_json(carrier, carrier, f));
  json group_json = json::array();
  for (const Assignment& f : group->maps()) group_json.push_back(darboux::json::assignment_to_json(carrier, carrier, f));
  json bdar = {{"members", members},
               {"contains_group", r.contains_group},
               {"all_automorphisms", r.all_automorphisms},
               {"closed_under_composition", r.closed_under_composition},
               {"closed_under_inverses", r.closed_under_inverses},
               {"subgroup", r.is_subgroup()},
               {"equals_group", r.equals_group}};
  bdar["commutative"] = r.commutative ? json(*r.commutative) : json(nullptr);
  return {{"carrier", darboux::json::poset_to_json(carrier)},
          {"group", group_json},
          {"group_order", group->order()},
          {"group_commutative", r.group_commutative},
          {"completely_integrally_closed", is_completely_integrally_closed(*group)},
          {"bdar", bdar}};
}

inline json run_real_eval(const json& p, const Budgets& b) {
  RefineBudget rb{b.depth};
  std::string expr = darboux::json::string_of(field(p, "expr", "payload"), "payload.expr");
  Real x = parse_real(expr, rb);
  if (x.is_infinite()) return {{"infinite", x.is_pos_inf() ? "+inf" : "-inf"}, {"exact", nullptr}};
  Enclosure e = x.refine(b.epsilon, rb);
  json out = {{"enclosure", darboux::json::to_json(e)},
              {"width", darboux::json::to_json(e.width())},
              {"epsilon", darboux::json::to_json(b.epsilon)}};
  out["exact"] = x.exact() ? json(format_rational(*x.exact())) : json(nullptr);
  return out;
}

inline json run_integrate(const json& p, const Budgets& b) {
  RealFunction f = darboux::json::function_of(p.contains("function") ? p["function"] : p, "payload");
  std::string s = option(p, "strategy", "uniform");
  if (s != "uniform" && s != "adaptive") schema_fail("payload.strategy", "expected uniform or adaptive");
  IntegralResult r = integrate(f, b.epsilon, b.depth, s == "uniform" ? Strategy::uniform : Strategy::adaptive);
  json out = darboux::json::integral_to_json(r);
  out["strategy"] = s;
  out["gap_certificate"] = format_rational(f.integration_gap());
  return out;
}

inline Sequence sequence_of(const json& p) {
  std::string kind = darboux::json::string_of(field(p, "sequence", "payload"), "payload.sequence");
  if (kind == "constant") return constant_sequence(darboux::json::rational_of(field(p, "value", "payload"), "payload.value"));
  if (kind == "eventually-constant")
    return eventually_constant_sequence(darboux::json::rationals_of(field(p, "prefix", "payload"), "payload.prefix"),
                                        darboux::json::rational_of(field(p, "value", "payload"), "payload.value"));
  if (kind == "reciprocal") return reciprocal_sequence();
  if (kind == "alternating") return alternating_sequence();
  if (kind == "ratio") return ratio_sequence();
  if (kind == "identity") return identity_sequence();
  schema_fail("payload.sequence", "unknown sequence '" + kind + "'");
}

inline Side side_of(const json& p) {
  std::string s = option(p, "side", "both");
  if (s == "both") return Side::both;
  if (s == "left") return Side::left;
  if (s == "right") return Side::right;
  schema_fail("payload.side", "expected left, right or both");
}

inline json run_limit(const json& p, const Budgets& b) {
  std::string kind = darboux::json::string_of(field(p, "kind", "payload"), "payload.kind");
  LimitResult r;
  if (kind == "sequence") {
    r = sequence_limit(sequence_of(p), b.epsilon, b.depth);
  } else if (kind == "continuity" || kind == "punctured") {
    RealFunction f = darboux::json::function_of(field(p, "function", "payload"), "payload.function");
    Rational x0 = darboux::json::rational_of(field(p, "at", "payload"), "payload.at");
    r = kind == "continuity" ? continuity_check(f, x0, b.epsilon, b.depth)
                             : punctured_limit(f, x0, b.epsilon, b.depth, side_of(p));
  } else if (kind == "stages") {
    const json& st = field(p, "stages", "payload");
    if (!st.is_array() || st.empty()) schema_fail("payload.stages", "expected a nonempty array");
    std::vector<Range> ranges;
    for (const json& s : st)
      ranges.push_back({darboux::json::extended_of(field(s, "inf", "payload.stages[]"), "payload.stages[].inf"),
                        darboux::json::extended_of(field(s, "sup", "payload.stages[]"), "payload.stages[].sup")});
    std::optional<Rational> gap;
    if (p.contains("certified_gap")) gap = darboux::json::rational_of(p["certified_gap"], "payload.certified_gap");
    std::size_t depth = std::min(b.depth, ranges.size() - 1);
    if (p.contains("budgets_strict") && flag(p, "budgets_strict", false)) depth = b.depth;
    r = filter_limit({"stages", [ranges](std::size_t k) { return ranges[k]; }, ranges.size(), gap}, b.epsilon,
                     depth);
  } else {
    schema_fail("payload.kind", "expected sequence, continuity, punctured or stages");
  }
  json out = darboux::json::limit_to_json(r);
  out["kind"] = kind;
  return out;
}

inline json run_audit(const json& p, const Budgets& b) {
  std::string kind = darboux::json::string_of(field(p, "kind", "payload"), "payload.kind");
  AuditReport report;
  if (kind == "composition") {
    PartialMap first = darboux::json::partial_map_of(field(p, "first", "payload"), "payload.first");
    PartialMap second = darboux::json::partial_map_of(field(p, "second", "payload"), "payload.second");
    report = audit_composition(first, second);
  } else if (kind == "product") {
    Poset source = darboux::json::poset_of(field(p, "source", "payload"), "payload.source");
    const json& factors = field(p, "factors", "payload");
    if (!factors.is_array() || factors.size() != 2) schema_fail("payload.factors", "expected two posets");
    Poset p1 = darboux::json::poset_of(factors[0], "payload.factors[0]");
    Poset p2 = darboux::json::poset_of(factors[1], "payload.factors[1]");
    Poset prod = product(p1, p2);
    const json& m = field(p, "map", "payload");
    if (!m.is_object()) schema_fail("payload.map", "expected an object");
    std::vector<std::optional<Element>> v(source.size());
    for (auto it = m.begin(); it != m.end(); ++it) {
      if (!it.value().is_array() || it.value().size() != 2) schema_fail("payload.map", "values must be pairs");
      Element a = p1.index_of(darboux::json::string_of(it.value()[0], "payload.map"));
      Element c = p2.index_of(darboux::json::string_of(it.value()[1], "payload.map"));
      v[source.index_of(it.key())] = a * p2.size() + c;
    }
    report = audit_product(PartialMap(source, prod, std::move(v)), p1, p2);
  } else if (kind == "evaluation") {
    Poset source = darboux::json::poset_of(field(p, "source", "payload"), "payload.source");
    Poset dom = darboux::json::poset_of(field(p, "domain", "payload"), "payload.domain");
    Poset cod = darboux::json::poset_of(field(p, "codomain", "payload"), "payload.codomain");
    if (flag(p, "augment_codomain", false)) cod = augment(cod).poset;
    FunctionSpace space(dom, cod, b.size);
    const json& m = field(p, "map", "payload");
    if (!m.is_object()) schema_fail("payload.map", "expected an object");
    std::vector<std::optional<Element>> v(source.size());
    for (auto it = m.begin(); it != m.end(); ++it)
      v[source.index_of(it.key())] =
          space.index_of(darboux::json::total_assignment_of(it.value(), dom, cod, "payload.map." + it.key()));
    report = audit_evaluation(PartialMap(source, space.poset(), std::move(v)), space);
  } else if (kind == "translation") {
    std::vector<Rational> shifts = darboux::json::rationals_of(field(p, "shifts", "payload"), "payload.shifts");
    std::vector<Real> samples;
    const json& xs = field(p, "samples", "payload");
    if (!xs.is_array()) schema_fail("payload.samples", "expected an array of expressions");
    for (const json& x : xs) samples.push_back(parse_real(darboux::json::string_of(x, "payload.samples[]")));
    report = audit_translation_group(shifts, samples, b.epsilon, RefineBudget{b.depth});
  } else if (kind == "semifield") {
    RefineBudget rb{b.depth};
    auto get = [&](const char* k) {
      return parse_real(darboux::json::string_of(field(p, k, "payload"), std::string("payload.") + k), rb);
    };
    report = audit_semifield(get("x"), get("y"), get("z"), b.epsilon, rb);
  } else if (kind == "linearity") {
    const json& fs = field(p, "functions", "payload");
    if (!fs.is_array() || fs.size() != 2) schema_fail("payload.functions", "expected two function descriptions");
    RealFunction f1 = darboux::json::function_of(fs[0], "payload.functions[0]");
    RealFunction f2 = darboux::json::function_of(fs[1], "payload.functions[1]");
    std::vector<Rational> scalars = darboux::json::rationals_of(field(p, "scalars", "payload"), "payload.scalars");
    if (scalars.size() != 2) schema_fail("payload.scalars", "expected two scalars");
    std::vector<Rational> pts;
    if (p.contains("partition"))
      pts = darboux::json::rationals_of(p["partition"], "payload.partition");
    else
      pts = Partition::uniform(f1.lo(), f1.hi(), 4).points();
    report = linearity_audit(darboux_functional(Partition(pts)), f1, f2, scalars[0], scalars[1]);
  } else {
    schema_fail("payload.kind", "unknown audit kind '" + kind + "'");
  }
  json out = darboux::json::report_to_json(report);
  out["kind"] = kind;
  return out;
}

}  // namespace detail

struct Outcome {
  json response;
  int exit_code = 0;
};

inline json error_json(const std::string& code, const std::string& message) {
  return {{"ok", false}, {"error", {{"code", code}, {"message", message}}}};
}

/// Runs one request. Exit code 0 on success, 2 when a budget ran out, 1 for
/// every other error.
inline Outcome run(const json& request) {
  std::string command;
  try {
    if (!request.is_object()) schema_fail("request", "expected an object");
    for (auto it = request.begin(); it != request.end(); ++it)
      if (it.key() != "command" && it.key() != "payload" && it.key() != "budgets")
        schema_fail("request", "unknown field '" + it.key() + "'");
    command = darboux::json::string_of(field(request, "command", "request"), "request.command");
    if (std::find(commands().begin(), commands().end(), command) == commands().end())
      schema_fail("request.command", "unknown command '" + command + "'");
    const json& payload = field(request, "payload", "request");
    if (!payload.is_object()) schema_fail("request.payload", "expected an object");
    Budgets b = budgets_of(request, command);
    json result;
    if (command == "complete") result = detail::run_complete(payload, b);
    else if (command == "extend") result = detail::run_extend(payload, b);
    else if (command == "darboux") result = detail::run_darboux(payload, b);
    else if (command == "aut") result = detail::run_aut(payload, b);
    else if (command == "cic") result = detail::run_cic(payload, b);
    else if (command == "real-eval") result = detail::run_real_eval(payload, b);
    else if (command == "integrate") result = detail::run_integrate(payload, b);
    else if (command == "limit") result = detail::run_limit(payload, b);
    else result = detail::run_audit(payload, b);
    return {{{"ok", true}, {"command", command}, {"result", result}}, 0};
  } catch (const Error& e) {
    json out = error_json(std::string(e.name()), e.what());
    if (!command.empty()) out["command"] = command;
    return {out, is_budget_error(e.code()) ? 2 : 1};
  } catch (const nlohmann::json::exception& e) {
    json out = error_json("SchemaError", e.what());
    if (!command.empty()) out["command"] = command;
    return {out, 1};
  }
}

/// Canonical text of a response: two-space indented, keys sorted, one
/// trailing newline.
inline std::string render(const json& response) { return response.dump(2) + "\n"; }

/// Parses request text and runs it; malformed JSON is a ParseError.
inline Outcome run_text(const std::string& text) {
  json request;
  try {
    request = json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    return {error_json("ParseError", e.what()), 1};
  }
  return run(request);
}

}  // namespace darboux::cli
