#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "opcat.h"

using nlohmann::json;

namespace {

constexpr int kExitPass = 0, kExitCheck = 1, kExitInput = 2;

struct Args {
  std::string manifest;
  std::string space;
  std::string out;
  bool self_test = false;
  bool compact = false;
  std::map<std::string, std::optional<std::size_t>> bounds{
      {"arity", {}}, {"objects", {}}, {"levels", {}}, {"words", {}}, {"degree", {}}};
};

std::optional<json> load(const std::string& path, const char* what) {
  std::ifstream in(path);
  if (!in) {
    std::cerr << "opcat: cannot open " << what << " '" << path << "'\n";
    return std::nullopt;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  json j = json::parse(ss.str(), nullptr, false);
  if (j.is_discarded()) {
    std::cerr << "opcat: " << what << " '" << path << "' is not valid JSON\n";
    return std::nullopt;
  }
  return j;
}

int run(const std::string& command, const Args& a) {
  json manifest = json::object();
  if (!a.manifest.empty()) {
    auto m = load(a.manifest, "manifest");
    if (!m) return kExitInput;
    manifest = *m;
  } else if (a.space.empty() && !a.self_test) {
    std::cerr << "opcat " << command << ": a manifest path is required (or --space / --self-test)\n";
    return kExitInput;
  }
  if (!a.space.empty()) {
    auto s = load(a.space, "space");
    if (!s) return kExitInput;
    if (!manifest.is_object()) {
      std::cerr << "opcat: manifest must be a JSON object\n";
      return kExitInput;
    }
    manifest["space"] = s->is_object() && s->contains("space") ? s->at("space") : *s;
  }
  json options{{"self_test", a.self_test}, {"bounds", json::object()}};
  for (const auto& [k, v] : a.bounds)
    if (v) options["bounds"][k] = *v;

  std::string mtext = manifest.dump(), otext = options.dump();
  opcat_report* rep = nullptr;
  opcat_status st = opcat_run(command.c_str(), mtext.c_str(), otext.c_str(), &rep);
  if (st != OPCAT_OK && st != OPCAT_CHECK_FAILED) {
    std::cerr << "opcat " << command << ": " << opcat_last_error() << "\n";
    opcat_report_free(rep);
    return kExitInput;
  }
  std::string text = opcat_report_json(rep, a.compact ? -1 : 2);
  opcat_report_free(rep);
  text += "\n";
  if (a.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream o(a.out, std::ios::binary);
    if (!o) {
      std::cerr << "opcat: cannot write '" << a.out << "'\n";
      return kExitInput;
    }
    o << text;
  }
  return st == OPCAT_OK ? kExitPass : kExitCheck;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks operads, monads and simplicial constructions on finite data."};
  app.set_version_flag("--version", std::string(opcat_version()));
  app.require_subcommand(1);

  Args args;
  std::string chosen;
  for (std::size_t i = 0; i < opcat_command_count(); ++i) {
    std::string name = opcat_command_name(i);
    CLI::App* sub = app.add_subcommand(name, "run the " + name + " checks");
    sub->add_option("manifest", args.manifest, "JSON manifest");
    sub->add_option("--space", args.space, "JSON file with a space, stored as the manifest's \"space\"");
    sub->add_option("--out,-o", args.out, "write the report here instead of stdout");
    sub->add_flag("--self-test", args.self_test, "ignore the manifest and run the built-in probes");
    sub->add_flag("--compact", args.compact, "single-line JSON");
    for (auto& [k, v] : args.bounds) sub->add_option("--bound-" + k, v, "override bounds." + k);
    sub->add_option("--degree", args.bounds["degree"], "alias of --bound-degree");
    sub->callback([&chosen, name] { chosen = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }
  return run(chosen, args);
}
