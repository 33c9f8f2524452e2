#include "nccount/config.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

namespace nccount {

void RunConfig::validate() const {
  if (truncation < 12) throw std::invalid_argument("truncation must be at least 12");
  if (precision < 30) throw std::invalid_argument("precision must be at least 30 digits");
  if (oracle_cap > 14 || oracle_cap < 1)
    throw std::invalid_argument("oracle cap must be between 1 and 14");
  if (format != "text" && format != "json" && format != "csv")
    throw std::invalid_argument("format must be text, json or csv");
}

void load_config_file(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    auto notspace = [](unsigned char c) { return !std::isspace(c); };
    line.erase(line.begin(), std::find_if(line.begin(), line.end(), notspace));
    line.erase(std::find_if(line.rbegin(), line.rend(), notspace).base(), line.end());
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key=value");
    std::string key = line.substr(0, eq);
    std::string val = line.substr(eq + 1);
    auto trim = [&](std::string& s) {
      s.erase(s.begin(), std::find_if(s.begin(), s.end(), notspace));
      s.erase(std::find_if(s.rbegin(), s.rend(), notspace).base(), s.end());
    };
    trim(key);
    trim(val);
    if (key == "truncation") cfg.truncation = std::stoi(val);
    else if (key == "precision") cfg.precision = std::stoi(val);
    else if (key == "oracle_cap") cfg.oracle_cap = std::stoi(val);
    else if (key == "format") cfg.format = val;
    else if (key == "out") cfg.out = val;
    else throw std::invalid_argument("config line " + std::to_string(lineno) + ": unknown key " + key);
  }
}

}  // namespace nccount
