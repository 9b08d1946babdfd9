#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "tgs/cli/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Transfers on finite correspondences: compose, transfer and verify."};
  std::string input, out;
  bool json = false;
  std::uint64_t seed = 0;
  std::size_t max_degree = 6;
  const std::map<std::string, tgs::cli::IrreducibilityCheck> irr_names{
      {"on", tgs::cli::IrreducibilityCheck::On},
      {"off", tgs::cli::IrreducibilityCheck::Off},
      {"auto", tgs::cli::IrreducibilityCheck::Auto}};

  app.add_option("--input", input, "Script file (default: stdin)");
  app.add_flag("--json", json, "Machine-readable report");
  app.add_option("--seed", seed, "Seed for generated suites")->capture_default_str();
  app.add_option("--max-degree", max_degree, "Largest point degree cross-checked by the symmetric power")
      ->capture_default_str();
  std::string irr_name = "auto";
  app.add_option("--check-irreducibility", irr_name, "Check minimal polynomials: on, off or auto")
      ->check(CLI::IsMember({"on", "off", "auto"}))
      ->capture_default_str();
  app.add_option("--out", out, "Write the report to this file instead of stdout");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::string text;
  std::string where = input.empty() ? "<stdin>" : input;
  if (input.empty()) {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream f(input, std::ios::binary);
    if (!f) {
      std::cerr << "tgs: cannot read " << input << "\n";
      return 2;
    }
    text.assign(std::istreambuf_iterator<char>(f), {});
  }

  std::ofstream file;
  if (!out.empty()) {
    file.open(out, std::ios::binary);
    if (!file) {
      std::cerr << "tgs: cannot write " << out << "\n";
      return 2;
    }
  }
  std::ostream& os = out.empty() ? std::cout : file;

  tgs::cli::Script script;
  try {
    script = tgs::cli::parse(text, {irr_names.at(irr_name)});
  } catch (const tgs::cli::ScriptError& e) {
    if (json) os << tgs::cli::error_json(e);
    std::cerr << tgs::cli::error_text(e, where);
    return 2;
  }
  tgs::cli::Report report = tgs::cli::execute(script, {seed, max_degree});
  os << (json ? tgs::cli::to_json(report) : tgs::cli::to_text(report));
  return report.failed() ? 1 : 0;
}
