#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dormant::cli {

struct CheckResult {
  std::string name;
  std::string params;
  std::string expected;
  std::string actual;
  bool pass = false;
};

struct SuiteConfig {
  std::vector<long long> p_list{3, 5};
  int level_max = 2;
  long long max_q = 343;
  double tol = 1e-6;
  std::uint64_t seed = 0x5eed2026;
  std::string cache_dir;
};

const std::vector<std::string>& suite_names();

// Runs one named suite (or "all") and returns its check rows.
std::vector<CheckResult> run_suite(const std::string& name,
                                   const SuiteConfig& cfg);

}  // namespace dormant::cli
