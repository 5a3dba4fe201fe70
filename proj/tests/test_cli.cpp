#include <catch2/catch_amalgamated.hpp>

#include <string>

#include "darboux/cli.hpp"

using nlohmann::json;
using darboux::cli::Outcome;

namespace {

Outcome run(const char* text) { return darboux::cli::run_text(text); }

json result_of(const char* text) {
  Outcome o = run(text);
  INFO(o.response.dump());
  REQUIRE(o.exit_code == 0);
  REQUIRE(o.response["ok"] == true);
  return o.response["result"];
}

std::string error_code(const Outcome& o) { return o.response["error"]["code"].get<std::string>(); }

const char* antichain = R"j({"elements": ["a", "b"], "covers": []})j";

}  // namespace

TEST_CASE("complete reports the Darboux completion") {
  std::string req = std::string(R"j({"command": "complete", "payload": {"poset": )j") + antichain + "}}";
  json r = result_of(req.c_str());
  REQUIRE(r["cocompletion_size"] == 4);
  REQUIRE(r["dar"] == json::parse(R"j([[], ["a"], ["b"], ["a", "b"]])j"));
  REQUIRE(r["dar_prime"] == json::parse(R"j([["a"], ["b"]])j"));
  REQUIRE(r["yoneda"]["a"] == json::parse(R"j(["a"])j"));
  REQUIRE(r["lex_is_identity"] == true);

  json chain = result_of(R"j({"command": "complete",
      "payload": {"elements": ["a", "b"], "covers": [["a", "b"]], "method": "closure"}})j");
  REQUIRE(chain["dar"] == json::parse(R"j([["a"], ["a", "b"]])j"));
  REQUIRE(chain["dar_prime"] == json::array());
  REQUIRE(chain["extremes_are_yoneda"] == true);
}

TEST_CASE("extend and darboux report extensions") {
  json r = result_of(R"j({"command": "extend", "payload": {
      "source": {"elements": ["a", "b", "c"], "covers": [["a", "b"], ["b", "c"]]},
      "target": {"elements": ["p", "q"], "covers": [["p", "q"]]},
      "map": {"b": "q"}, "augment_target": true}})j");
  REQUIRE(r["lower"] == json::parse(R"j({"a": "-inf", "b": "q", "c": "q"})j"));
  REQUIRE(r["upper"] == json::parse(R"j({"a": "q", "b": "q", "c": "+inf"})j"));
  REQUIRE(r["darboux_set"] == json::parse(R"j(["b"])j"));

  json g = result_of(R"j({"command": "extend", "payload": {
      "source": {"elements": ["a", "b"]}, "target": {"elements": ["p", "q"]}, "map": {}, "mode": "general"}})j");
  REQUIRE(g["status"] == "not_extremizable");
  REQUIRE(g["extension_count"] == 4);

  json d = result_of(R"j({"command": "darboux", "payload": {
      "source": {"elements": ["x", "y", "z"], "covers": [["x", "z"], ["y", "z"]]},
      "target": {"elements": ["lo", "hi"], "covers": [["lo", "hi"]]},
      "map": {"x": "lo", "y": "hi"}, "augment_target": true}})j");
  REQUIRE(d["darboux_set"] == json::parse(R"j(["x", "y"])j"));
  REQUIRE(d["encompassing"] == false);

  Outcome bad = run(R"j({"command": "extend", "payload": {
      "source": {"elements": ["a", "b"]}, "target": {"elements": ["p", "q"]}, "map": {}}})j");
  REQUIRE(bad.exit_code == 1);
  REQUIRE(error_code(bad) == "NotCompleteLattice");
  Outcome mono = run(R"j({"command": "extend", "payload": {
      "source": {"elements": ["a", "b"], "covers": [["a", "b"]]},
      "target": {"elements": ["p", "q"], "covers": [["p", "q"]]}, "map": {"a": "q", "b": "p"}}})j");
  REQUIRE(error_code(mono) == "NotMonotone");
}

TEST_CASE("aut and cic report groups") {
  json a = result_of(R"j({"command": "aut", "payload": {"poset": {"elements": ["a", "b", "c"]}, "augment": true}})j");
  REQUIRE(a["count"] == 6);
  json c = result_of(R"j({"command": "cic", "payload": {"poset": {"elements": ["a", "b"]}}})j");
  REQUIRE(c["group_order"] == 2);
  REQUIRE(c["completely_integrally_closed"] == true);
  REQUIRE(c["bdar"]["subgroup"] == true);
  REQUIRE(c["bdar"]["equals_group"] == true);
  json t = result_of(R"j({"command": "cic", "payload": {"poset": {"elements": ["a", "b"]}, "generators": []}})j");
  REQUIRE(t["group_order"] == 1);
  REQUIRE(t["bdar"]["members"].size() == 1);
  Outcome budget = run(R"j({"command": "aut", "payload": {"elements": ["a", "b", "c"]}, "budgets": {"size": 2}})j");
  REQUIRE(budget.exit_code == 2);
  REQUIRE(error_code(budget) == "SizeLimitExceeded");
}

TEST_CASE("real-eval encloses the value") {
  json r = result_of(R"j({"command": "real-eval", "payload": {"expr": "sqrt(2)*sqrt(2)"},
                         "budgets": {"epsilon": "1/1000000000"}})j");
  darboux::Rational lo = darboux::parse_rational(r["enclosure"]["lo"].get<std::string>());
  darboux::Rational hi = darboux::parse_rational(r["enclosure"]["hi"].get<std::string>());
  REQUIRE(lo <= 2);
  REQUIRE(hi >= 2);
  REQUIRE(hi - lo <= darboux::make_rational(1, 1000000000));
  REQUIRE(result_of(R"j({"command": "real-eval", "payload": {"expr": "1/2 + 1/3"}})j")["exact"] == "5/6");
  REQUIRE(result_of(R"j({"command": "real-eval", "payload": {"expr": "-inf"}})j")["infinite"] == "-inf");
  Outcome sign = run(R"j({"command": "real-eval", "payload": {"expr": "sqrt(2)*sqrt(2) - 2"},
                         "budgets": {"depth": 30}})j");
  REQUIRE(sign.exit_code == 2);
  REQUIRE(run(R"j({"command": "real-eval", "payload": {"expr": "sqrt("}})j").exit_code == 1);
}

TEST_CASE("integrate and limit verdicts") {
  json id = result_of(R"j({"command": "integrate", "payload": {"oracle": "identity", "interval": ["0", "1"]},
                          "budgets": {"epsilon": "1/1000"}})j");
  REQUIRE(id["verdict"] == "Integrable");
  REQUIRE(id["value"] == "1/2");
  json st = result_of(R"j({"command": "integrate", "payload": {"breaks": ["0", "1/2", "1"], "values": ["2", "0"]}})j");
  REQUIRE(st["value"] == "1");
  REQUIRE(st["lower"] == st["upper"]);
  json dir = result_of(R"j({"command": "integrate", "payload": {"function": {"oracle": "dirichlet", "interval": ["0", "1"]}}})j");
  REQUIRE(dir["verdict"] == "GapCertified");
  REQUIRE(dir["lower"] == "0");
  REQUIRE(dir["upper"] == "1");

  json alt = result_of(R"j({"command": "limit", "payload": {"kind": "sequence", "sequence": "alternating"}, "budgets": {"depth": 10}})j");
  REQUIRE(alt["verdict"] == "DivergentGap");
  REQUIRE(alt["value"] == "2");
  json ev = result_of(R"j({"command": "limit", "payload": {"kind": "sequence", "sequence": "eventually-constant",
                          "prefix": ["1", "2"], "value": "7"}, "budgets": {"depth": 5}})j");
  REQUIRE(ev["value"] == "7");
  json inf = result_of(R"j({"command": "limit", "payload": {"kind": "sequence", "sequence": "identity"}})j");
  REQUIRE(inf["value"] == "+inf");
  json cont = result_of(R"j({"command": "limit", "payload": {"kind": "continuity", "at": "0",
                            "function": {"oracle": "identity", "interval": ["-1", "1"]}}})j");
  REQUIRE(cont["verdict"] == "Converged");
  REQUIRE(cont["value"] == "0");
  json stages = result_of(R"j({"command": "limit", "payload": {"kind": "stages",
                              "stages": [{"inf": "-1", "sup": "1"}], "certified_gap": "2"}})j");
  REQUIRE(stages["verdict"] == "DivergentGap");
  Outcome strict = run(R"j({"command": "limit", "payload": {"kind": "stages", "budgets_strict": true,
                           "stages": [{"inf": "-1", "sup": "1"}]}, "budgets": {"depth": 3}})j");
  REQUIRE(strict.exit_code == 1);
  REQUIRE(error_code(strict) == "StageUnavailable");
  Outcome outside = run(R"j({"command": "limit", "payload": {"kind": "continuity", "at": "5",
                            "function": {"oracle": "identity", "interval": ["-1", "1"]}}})j");
  REQUIRE(error_code(outside) == "OutsideDomain");
}

TEST_CASE("audit kinds") {
  json sf = result_of(R"j({"command": "audit", "payload": {"kind": "semifield", "x": "sqrt(2)", "y": "sqrt(3)", "z": "sqrt(5)"}})j");
  REQUIRE(sf["passed"] == true);
  json tr = result_of(R"j({"command": "audit", "payload": {"kind": "translation", "shifts": ["1", "-1/2"], "samples": ["sqrt(2)", "0"]}})j");
  REQUIRE(tr["passed"] == true);
  json lin = result_of(R"j({"command": "audit", "payload": {"kind": "linearity", "scalars": ["1", "1"],
      "functions": [{"oracle": "dirichlet", "interval": ["0", "1"]}, {"oracle": "constant(1)", "interval": ["0", "1"]}],
      "partition": ["0", "1/3", "1"]}})j");
  REQUIRE(lin["passed"] == true);
  json prod = result_of(R"j({"command": "audit", "payload": {"kind": "product",
      "source": {"elements": ["u", "v"], "covers": [["u", "v"]]},
      "factors": [{"elements": ["0", "1"], "covers": [["0", "1"]]}, {"elements": ["x", "y"], "covers": [["x", "y"]]}],
      "map": {"u": ["0", "y"]}}})j");
  REQUIRE(prod["passed"] == true);
  json ev = result_of(R"j({"command": "audit", "payload": {"kind": "evaluation",
      "source": {"elements": ["s"]}, "domain": {"elements": ["p"]},
      "codomain": {"elements": ["0", "1"], "covers": [["0", "1"]]},
      "map": {"s": {"p": "1"}}}})j");
  REQUIRE(ev["passed"] == true);
  json comp = result_of(R"j({"command": "audit", "payload": {"kind": "composition",
      "first": {"source": {"elements": ["u", "v"], "covers": [["u", "v"]]},
                "target": {"elements": ["0", "1", "2"], "covers": [["0", "1"], ["1", "2"]]}, "map": {"v": "1"}},
      "second": {"source": {"elements": ["0", "1", "2"], "covers": [["0", "1"], ["1", "2"]]},
                 "target": {"elements": ["lo", "hi"], "covers": [["lo", "hi"]]}, "map": {"1": "hi"}}}})j");
  REQUIRE(comp["passed"] == true);
  Outcome hyp = run(R"j({"command": "audit", "payload": {"kind": "linearity", "scalars": ["-1", "1"],
      "functions": [{"oracle": "identity", "interval": ["0", "1"]}, {"oracle": "identity", "interval": ["0", "1"]}]}})j");
  REQUIRE(error_code(hyp) == "HypothesisViolated");
}

TEST_CASE("malformed requests are schema errors") {
  REQUIRE(error_code(run("{")) == "ParseError");
  REQUIRE(error_code(run("[]")) == "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "complete"})j")) == "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "x", "payload": {}})j")) == "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {}, "more": 1})j")) == "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {"elements": "ab"}})j")) == "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {"elements": []}, "budgets": {"size": -1}})j")) ==
          "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {"elements": []}, "budgets": {"epsilon": "0"}})j")) ==
          "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {"elements": []}, "budgets": {"speed": 1}})j")) ==
          "SchemaError");
  REQUIRE(error_code(run(R"j({"command": "aut", "payload": {"elements": ["a"], "covers": [["a", "z"]]}})j")) ==
          "UnknownElement");
  Outcome o = run(R"j({"command": "complete", "payload": {"elements": ["a", "a"]}})j");
  REQUIRE(o.exit_code == 1);
  REQUIRE(o.response["command"] == "complete");
  REQUIRE(error_code(o) == "DuplicateElement");
}

TEST_CASE("identical requests render identical bytes") {
  const char* requests[] = {
      R"j({"command": "complete", "payload": {"elements": ["c", "a", "b"], "covers": [["a", "c"]]}})j",
      R"j({"command": "cic", "payload": {"elements": ["a", "b", "c"]}})j",
      R"j({"command": "integrate", "payload": {"oracle": "sqrt", "interval": ["0", "2"]}, "budgets": {"epsilon": "1/100", "depth": 12}})j",
      R"j({"command": "real-eval", "payload": {"expr": "sqrt(3) + sqrt(5)"}})j"};
  for (const char* req : requests) {
    std::string first = darboux::cli::render(run(req).response);
    REQUIRE(first == darboux::cli::render(run(req).response));
    REQUIRE(first.back() == '\n');
    REQUIRE(first.find("\n{") == std::string::npos);
  }
  // Key order in the request does not change the output.
  REQUIRE(darboux::cli::render(run(R"j({"payload": {"expr": "1/3"}, "command": "real-eval"})j").response) ==
          darboux::cli::render(run(R"j({"command": "real-eval", "payload": {"expr": "1/3"}})j").response));
}
