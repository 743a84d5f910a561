#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace ul {

struct SuiteConfig {
  int p = 3;
  std::uint64_t seed = 0;
  std::set<std::string> skip;
  // Tree radius; negative picks 4 for p = 3 and 2 otherwise.
  int tree_radius = -1;
  int degree_bound = 8;
  int samples = 100;
};

enum class CheckStatus { Pass, Fail, Skip };

struct SuiteResult {
  std::string name;
  std::string description;
  CheckStatus status = CheckStatus::Fail;
  std::string detail;
};

std::vector<std::string> suite_check_names();
std::vector<SuiteResult> run_suite(const SuiteConfig &config);
std::string format_suite(int p, const std::vector<SuiteResult> &results);
bool suite_passed(const std::vector<SuiteResult> &results);

} // namespace ul
