#include <exception>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "mcsm/types.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Multicore speedup models: communication/synchronization-aware "
      "speedup evaluation, optimizer sweeps and a cycle-level simulator"};
  app.require_subcommand(1);

  mcsm::cli::Invocation inv;
  for (const char* name : {"speedup", "optimal", "simulate", "advise"}) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("-c,--config", inv.config_path, "JSON experiment config");
    sub->add_option("-p,--preset", inv.preset,
                    "built-in figure preset (fig6..fig13)");
    sub->add_option("-o,--out", inv.out_dir, "output directory");
    sub->callback([&inv, name] { inv.command = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    mcsm::cli::run_command(inv);
  } catch (const mcsm::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const mcsm::SolverError& e) {
    std::cerr << "solver error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
