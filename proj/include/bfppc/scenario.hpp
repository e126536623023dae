#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "bfppc/engine.hpp"
#include "bfppc/trace_io.hpp"

namespace bfppc {

struct OutputOptions {
  std::filesystem::path dir;
  bool csv = true;
  bool json = true;
  bool svg = true;
};

// A fully assembled experiment: run spec, simulation options, output
// destinations and the feasibility verdict established at load time.
struct Scenario {
  std::string name;
  RunSpec spec;
  SimOptions sim;
  OutputOptions output;
  FeasibilityReport feasibility;
  std::vector<std::string> warnings;
};

// Loads and validates a scenario file.  Structural violations (even
// powers, nonpositive gains, malformed sections) throw; gain-budget
// infeasibility only produces warnings, since explicitly given parameter
// sets are allowed to undercut the conservative synthesis bounds.
// With force=true the structural gain checks are skipped too.
Scenario load_scenario(const std::filesystem::path& path, bool force = false);

Scenario scenario_from_json(const nlohmann::json& j, const std::string& fallback_name,
                            bool force = false);

// Expands a bundled scenario by name.
Scenario scenario_from_builtin(const std::string& name);

struct RunResult {
  int exit_code = 1;
  bool pass = false;
  std::filesystem::path directory;
  nlohmann::json report;
  SimTrace trace;
};

// Simulates, audits the envelopes, and writes trace.csv, report.json and
// the figure set.  Exit code 0 iff the run finished and every envelope
// audit passed.  The BFPPC_OUT environment variable overrides the output
// root.
RunResult run_scenario(const Scenario& scenario);

}  // namespace bfppc
