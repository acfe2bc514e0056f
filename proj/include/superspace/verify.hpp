#pragma once

// Invariant suites run by `superspace verify <suite>`. Every check is exact;
// random inputs come from a Sampler seeded with `seed`, so runs repeat.

#include <cstdint>
#include <string>
#include <vector>

#include "superspace/realform.hpp"

namespace superspace {

struct VerifyOptions {
  std::uint64_t seed = 0;
  ConjugationConfig cfg;
  // Use the det(s^{-1}) det(p - q s r) variant in the Berezinian suite.
  bool printed_berezinian = false;
  // Exhaustive super-Jacobi over all 25^3 basis triples.
  bool full = false;
};

struct CheckResult {
  std::string suite;
  std::string name;
  std::string anchor;  // the statement being checked
  bool passed = false;
  std::string detail;
};

struct SuiteReport {
  std::vector<CheckResult> checks;
  std::vector<std::string> notes;
  bool passed() const;
};

// "all" first, then the individual suites.
const std::vector<std::string>& suite_names();

// Throws std::invalid_argument for an unknown suite.
SuiteReport run_verify(const std::string& suite, const VerifyOptions& options);

}  // namespace superspace
