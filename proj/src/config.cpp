#include "torus/config.hpp"

#include <fstream>
#include <sstream>

#include "torus/error.hpp"

namespace torus {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

template <class T>
T number(const std::string& key, const std::string& value, bool positive = true) {
  std::istringstream in(value);
  T out{};
  in >> out;
  if (!in || !in.eof()) throw ParseError("config key '" + key + "': bad value '" + value + "'");
  if (positive && !(out > 0)) throw ParseError("config key '" + key + "' must be positive");
  return out;
}

}  // namespace

Config parse_config(const std::string& text, Config c) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "trial_division_bound")
      c.trial_division_bound = number<std::uint64_t>(key, value);
    else if (key == "height_bound")
      c.height_bound = number<double>(key, value);
    else if (key == "bogomolov_constant")
      c.bogomolov_constant = number<double>(key, value);
    else if (key == "search_bound")
      c.search_bound = number<long>(key, value);
    else if (key == "seed")
      c.seed = number<std::uint64_t>(key, value, false);
    else if (key == "workers")
      c.workers = number<unsigned>(key, value);
    else if (key == "samples")
      c.samples = number<std::size_t>(key, value);
    else if (key == "digit_cap")
      c.digit_cap = number<std::size_t>(key, value);
    else if (key == "target_err")
      c.target_err = number<double>(key, value);
    else
      throw ParseError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
  }
  return c;
}

Config load_config(const std::string& path, Config base) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

}  // namespace torus
