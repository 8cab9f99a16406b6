#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "lss/limits.hpp"

namespace lss {

struct SuiteResult {
  std::string suite;
  long long checks = 0;
  long long failures = 0;
  std::vector<std::string> samples;  // first few failure descriptions
  bool passed() const { return failures == 0; }
};

struct VerifyOptions {
  int max_n = 5;
  int jobs = 1;
  int max_d = 5;  // classifier suite
};

// "matching", "pmd", "tpmd", "leading-terms", "classifier" or "all".
// Throws BadParameter for other names. Results do not depend on jobs.
std::vector<SuiteResult> run_verify(std::string_view suite, const VerifyOptions& options);

std::vector<std::string_view> verify_suite_names();

}  // namespace lss
