// darboux: runs one JSON request and prints the JSON response.
//
//   darboux run [file]          request object with "command"
//   darboux <command> [file]    payload (or {"payload", "budgets"}) for command

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "darboux/cli.hpp"

namespace {

std::string read_input(const std::string& path) {
  if (path.empty() || path == "-")
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void print_summary(const nlohmann::json& response) {
  if (!response.value("ok", false)) {
    std::cerr << "error " << response["error"]["code"].get<std::string>() << ": "
              << response["error"]["message"].get<std::string>() << "\n";
    return;
  }
  const auto& r = response["result"];
  std::cerr << response["command"].get<std::string>() << ":";
  for (const char* key : {"verdict", "value", "status", "passed", "count", "group_order"})
    if (r.contains(key)) std::cerr << " " << key << "=" << r[key].dump();
  if (r.contains("dar")) std::cerr << " dar=" << r["dar"].size() << " dar_prime=" << r["dar_prime"].size();
  if (r.contains("enclosure")) std::cerr << " enclosure=" << r["enclosure"].dump();
  std::cerr << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Darboux extensions, completions, cut arithmetic and integration"};
  app.require_subcommand(1);
  app.fallthrough();
  bool summary = false;
  app.add_flag("--summary", summary, "Print a one-line summary to stderr");

  std::string path;
  std::string chosen;
  auto* run = app.add_subcommand("run", "Run a full request {command, payload, budgets}");
  run->add_option("file", path, "Request file (default: stdin)");
  run->callback([&] { chosen = "run"; });
  for (const std::string& name : darboux::cli::commands()) {
    auto* sub = app.add_subcommand(name, "Run the " + name + " command on a payload");
    sub->add_option("file", path, "Payload file (default: stdin)");
    sub->callback([&chosen, name] { chosen = name; });
  }
  CLI11_PARSE(app, argc, argv);

  std::string text;
  try {
    text = read_input(path);
  } catch (const std::exception& e) {
    std::cout << darboux::cli::render(darboux::cli::error_json("InvalidArgument", e.what()));
    return 1;
  }

  darboux::cli::Outcome out;
  if (chosen == "run") {
    out = darboux::cli::run_text(text);
  } else {
    nlohmann::json body;
    try {
      body = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      std::cout << darboux::cli::render(darboux::cli::error_json("ParseError", e.what()));
      return 1;
    }
    nlohmann::json request = {{"command", chosen}};
    if (body.is_object() && body.contains("payload")) {
      request["payload"] = body["payload"];
      if (body.contains("budgets")) request["budgets"] = body["budgets"];
    } else {
      request["payload"] = body;
    }
    out = darboux::cli::run(request);
  }
  std::cout << darboux::cli::render(out.response);
  if (summary) print_summary(out.response);
  return out.exit_code;
}
