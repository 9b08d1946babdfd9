#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "tgs/verify/suites.hpp"

using namespace tgs;

namespace {

struct Requirement {
  CheckResult result;
  std::size_t minimum;
};

bool report(int n, const std::string& name, const std::vector<Requirement>& parts) {
  bool ok = true;
  std::string detail;
  for (const auto& p : parts) {
    bool enough = p.result.instances >= p.minimum;
    ok = ok && p.result.passed() && enough;
    if (!detail.empty()) detail += "; ";
    detail += p.result.summary();
    if (!enough) detail += " (needs " + std::to_string(p.minimum) + ")";
  }
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << n << " " << name << ": " << detail << "\n";
  for (const auto& p : parts)
    for (const auto& f : p.result.failures) std::cout << "  failed: " << f << "\n";
  std::cout.flush();
  return ok;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

/// Runs the CLI on every script listed in the manifest and compares stdout
/// with the golden report next to it.
CheckResult golden_scripts(const std::string& tgs, const std::string& dir) {
  CheckResult r{"golden reports", 0, {}};
  std::ifstream manifest(dir + "/MANIFEST");
  std::string name;
  while (manifest >> name) {
    ++r.instances;
    std::string cmd = "\"" + tgs + "\" --json --seed 0 --input \"" + dir + "/" + name + ".tgs\" 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
      r.failures.push_back(name + ": cannot run " + tgs);
      continue;
    }
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    pclose(pipe);
    if (out != slurp(dir + "/" + name + ".json")) r.failures.push_back(name + ": report differs from the golden file");
  }
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = 0;
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  ok &= report(1, "reduction", {{reduction_suite(seed * 8 + 1, SuiteSize::Small), 20}});
  ok &= report(2, "norm and trace", {{norm_trace_suite(seed * 8 + 2, SuiteSize::Small), 30}});
  ok &= report(3, "split map p", {{split_p_suite(seed * 8 + 3, SuiteSize::Small), 10}});
  ok &= report(4, "sections and split algebras",
               {{section_suite(seed * 8 + 4, SuiteSize::Small), 10}, {split_points_suite(seed * 8 + 5, SuiteSize::Small), 10}});
  ok &= report(5, "coproduct", {{coproduct_suite(seed * 8 + 6, SuiteSize::Small), 10}});
  ok &= report(6, "functoriality", {{functoriality_suite(), 24}});
  ok &= report(7, "radicial transfers", {{radicial_suite(), 6}, {probe_suite(), 3}});
  ok &= report(8, "composition calculus",
               {{associativity_suite(), 5}, {graph_substitution_suite(), 1}, {degree_suite(), 1},
                {length_conservation_suite(), 1}});
  if (argc >= 3) {
    ok &= report(9, "command line", {{golden_scripts(argv[1], argv[2]), 1}});
  } else {
    std::cout << "FAIL criterion 9 command line: usage: acceptance TGS_BINARY SCRIPT_DIR\n";
    ok = false;
  }
  auto secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s in %.1f s\n", ok ? "all criteria pass" : "some criteria fail", secs);
  return ok ? 0 : 1;
}
