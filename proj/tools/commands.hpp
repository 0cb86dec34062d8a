#pragma once

#include <stdexcept>
#include <string>

namespace mcsm::cli {

// Anything wrong with the experiment configuration; maps to exit code 2.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Invocation {
  std::string command;      // speedup | optimal | simulate | advise
  std::string config_path;  // optional JSON config
  std::string preset;       // optional built-in preset (fig6..fig13)
  std::string out_dir;      // output directory
};

// Runs one command to completion. Throws ConfigError for validation
// problems and lets SolverError / runtime errors escape for exit code 3.
void run_command(const Invocation& inv);

}  // namespace mcsm::cli
