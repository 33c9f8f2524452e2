#ifndef NCCOUNT_VERIFY_HPP
#define NCCOUNT_VERIFY_HPP

#include "nccount/config.hpp"

#include <string>
#include <vector>

namespace nccount {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Invariant suites runnable from the command line; "all" runs everything.
std::vector<std::string> verify_suite_names();
std::vector<CheckResult> run_verify_suite(const std::string& suite, const RunConfig& cfg);

}  // namespace nccount

#endif
