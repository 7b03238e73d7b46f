#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace cdepth {

enum class Command {
  Depth,
  MaxDepth,
  Plank,
  Region,
  Witness,
  Transversal,
  Tukey,
  Beta,
  Blemish,
  Table,
  Reduce,
  Verify,
};

enum class OutputFormat { Json, Csv, Svg };

// One CLI invocation. `params` carries the command-specific knobs (r, k, d,
// steps, samples, seed, point, dir, ...); required keys are validated before
// any work is dispatched. Seed defaults to 42.
struct RunConfig {
  Command command = Command::Depth;
  std::string input_path;
  std::map<std::string, std::string> params;
  std::string output_path;  // empty -> stdout
  OutputFormat format = OutputFormat::Json;
};

Command command_from_name(const std::string& name);

// Dispatches to the owning module and writes deterministic output artifacts.
// Returns 0. Precondition and validation failures throw
// std::invalid_argument (exit 1 at the CLI); internal errors such as LP
// failure or witness-not-found throw std::runtime_error (exit 2).
int run(const RunConfig& cfg);

}  // namespace cdepth
