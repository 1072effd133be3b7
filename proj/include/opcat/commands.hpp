#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "opcat/simplicial.hpp"

namespace opcat {

inline constexpr const char* kVersion = "0.1.0";

const std::vector<std::string>& command_names();

// Runs a subcommand on a manifest. options may hold "bounds" (arity, objects, levels, words,
// degree) overriding the manifest's, and "self_test": true to ignore the manifest and run the
// built-in probe suite. The result has "ok", the bounds used and the version.
// Throws Error on bad input (Parse, Validation, Domain, Bound).
nlohmann::json run_command(const std::string& name, const nlohmann::json& manifest,
                           const nlohmann::json& options = nlohmann::json::object());

// A based simplicial set through the given level from a manifest "space" object: a sphere
// model {"model": "sphere", "dim": n}, "point", {"model": "discrete", "points": n}, or explicit
// tables {"model": "explicit", "sizes", "faces", "degeneracies"} with simplex 0 the basepoint.
SimplicialObject space_from_json(const nlohmann::json& v, std::size_t levels);

// The built-in manifest used by --self-test.
nlohmann::json self_test_manifest(const std::string& name);

}  // namespace opcat
