#include <CLI11.hpp>

#include <iostream>

#include "pointless/cli.hpp"

int main(int argc, char** argv) {
  using namespace pointless::cli;
  Invocation inv;

  std::string command_list;
  for (auto c : commands()) command_list += (command_list.empty() ? "" : ", ") + std::string(c);

  CLI::App app{"Finite frames, localic products, way-below and exponentials", "pointless"};
  app.add_option("command", inv.command, "one of: " + command_list)->required();
  app.add_option("inputs", inv.inputs, "frame or presentation files, or @builtin");
  app.add_option("--tests", inv.tests, "test frames Z for verify-exponential");
  app.add_option("--max-generators", inv.caps.generators, "generator cap")->capture_default_str();
  app.add_option("--max-ideals", inv.caps.ideals, "C-ideal cap")->capture_default_str();
  app.add_flag("--unsafe-caps", inv.caps.unsafe, "lift the size caps");
  app.add_option("--threads", inv.threads, "worker threads for assignment enumeration")
      ->check(CLI::Range(1u, 64u))
      ->capture_default_str();
  app.add_option("-o,--output", inv.output, "write the report to a file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }
  return run(inv, std::cout, std::cerr);
}
