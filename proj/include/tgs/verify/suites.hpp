#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tgs {

/// Outcome of one battery: how many instances ran and a line per failure.
struct CheckResult {
  std::string label;
  std::size_t instances = 0;
  std::vector<std::string> failures;
  bool passed() const { return instances > 0 && failures.empty(); }
  std::string summary() const;
};

enum class SuiteSize { Small, Full };

/// Identities of u and the symmetric power pushforward on generated algebras.
CheckResult reduction_suite(std::uint64_t seed, SuiteSize size);
CheckResult norm_trace_suite(std::uint64_t seed, SuiteSize size);
CheckResult split_p_suite(std::uint64_t seed, SuiteSize size);
CheckResult section_suite(std::uint64_t seed, SuiteSize size);
CheckResult split_points_suite(std::uint64_t seed, SuiteSize size);
CheckResult coproduct_suite(std::uint64_t seed, SuiteSize size);
CheckResult base_change_suite(std::uint64_t seed, SuiteSize size);
CheckResult basis_independence_suite(std::uint64_t seed, SuiteSize size);
/// All of the above, in that order.
std::vector<CheckResult> lemma_suites(std::uint64_t seed, SuiteSize size);

/// Curated correspondences.
CheckResult functoriality_suite();
CheckResult radicial_suite();
/// Canonical assignment passes; a perturbed one fails exactly where perturbed.
CheckResult probe_suite();
CheckResult associativity_suite();
CheckResult graph_substitution_suite();
CheckResult degree_suite();
CheckResult length_conservation_suite();

}  // namespace tgs
