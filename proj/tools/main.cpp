#include "app/commands.hpp"

#include "cydesing/error.hpp"

#include "CLI11.hpp"

#include <fstream>
#include <iostream>

namespace {

enum ExitCode { kOk = 0, kOther = 1, kParse = 2, kPrecondition = 3, kCap = 4 };

}  // namespace

int main(int argc, char** argv) {
  using namespace cydesing;
  CLI::App cli{"Exact analysis of Calabi-Yau orbifold desingularizations"};
  cli.set_version_flag("--version", "cydesing 0.1.0");

  std::string command;
  std::string format = "text";
  std::string out_path;
  app::RunOptions opts;
  std::string scenario;
  std::size_t cap = 0;

  cli.add_option("command", command, "Command to run")
      ->required()
      ->check(CLI::IsMember(app::command_names()));
  cli.add_option("--scenario", scenario, "Scenario file");
  cli.add_option("--out", out_path, "Write the report to this file");
  cli.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  cli.add_option("--cap", cap, "Enumeration cap (closure, Weyl group, lifts, constraints)");
  cli.add_option("--grid-n", opts.grid_n, "Grid size for chi commands")->check(CLI::Range(1u, 4u));
  cli.add_option("--seed", opts.seed, "Seed for witness generation");
  cli.add_option("--threads", opts.threads, "Worker threads for chi-count (0 = hardware)");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = cli.exit(e);
    return rc == 0 ? kOk : kParse;
  }
  if (!scenario.empty()) opts.scenario = scenario;
  if (cap) opts.cap = cap;

  try {
    app::Report report = app::run_command(command, opts);
    std::string text = format == "json" ? report.dump(2) + "\n" : app::render_text(report);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream f(out_path, std::ios::binary);
      if (!f) throw ParseError("cannot write " + out_path);
      f << text;
    }
    return kOk;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kCap;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kOther;
  }
}
