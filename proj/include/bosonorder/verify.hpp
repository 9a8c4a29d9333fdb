#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace bosonorder {

struct VerifyOptions {
  unsigned max_n = 8;
  std::uint64_t seed = 20230817;
  /// Test hook: perturbs one computed coefficient per suite by +1, so a
  /// correct build must report failure.
  bool corrupt = false;
};

struct SuiteResult {
  std::string suite;
  unsigned cases = 0;
  double max_deviation = 0.0;  // 0 for purely exact suites
  bool passed = true;
  std::string note;  // first failure description, empty on success
};

/// Suite names in execution order: rewrite, lemma4, lemma5, theorem1,
/// theorem2, fock, transforms.
const std::vector<std::string>& verify_suite_names();

/// Runs one suite; throws std::invalid_argument for an unknown name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

std::vector<SuiteResult> run_all_suites(const VerifyOptions& opts);

}  // namespace bosonorder
