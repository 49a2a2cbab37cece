#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "ccloops/cli.hpp"

namespace {

bool read_all(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), {});
    return !std::cin.bad();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Chein loops of Coxeter groups: construction, automorphisms, cohomology and amalgams"};
  ccl::RunConfig config;
  std::string path;
  bool no_cross_check = false;

  app.add_option("command", config.command, "Command to run")
      ->required()
      ->check(CLI::IsMember(ccl::command_names()));
  app.add_option("input", path, "Input file, or - for standard input")->required();
  app.add_option("--cap", config.cap, "Group order limit")->check(CLI::PositiveNumber);
  app.add_option("--budget", config.budget, "Search node limit")->check(CLI::PositiveNumber);
  app.add_flag("--json", config.json, "Emit a JSON report");
  app.add_flag("--strict", config.strict, "Reject disconnected graphs");
  app.add_flag("--no-cross-check", no_cross_check, "Skip brute-force coefficient groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : ccl::kExitUsage;
  }
  config.cross_check = !no_cross_check;
  config.input_name = path;

  std::string text;
  if (!read_all(path, text)) {
    std::cerr << "ccloops: cannot read '" << path << "'\n";
    return ccl::kExitUsage;
  }
  const ccl::RunResult result = ccl::run(config, text);
  std::cout << result.output;
  return result.exit_code;
}
