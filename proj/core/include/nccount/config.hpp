#ifndef NCCOUNT_CONFIG_HPP
#define NCCOUNT_CONFIG_HPP

#include <string>

namespace nccount {

// Run parameters shared by the CLI commands.  Values come from an optional
// key=value config file, overridden by command-line flags.
struct RunConfig {
  int truncation = 80;     // series truncation order, >= 12
  int precision = 60;      // working decimal digits, >= 30
  int oracle_cap = 12;     // maximum point count for brute-force censuses, <= 14
  std::string format = "text";  // text, json or csv
  std::string out;              // output path; empty = stdout

  void validate() const;  // throws std::invalid_argument on violations
};

// Parses "key = value" lines ('#' comments, blank lines ignored) into cfg.
// Unknown keys are an error.
void load_config_file(const std::string& path, RunConfig& cfg);

}  // namespace nccount

#endif
