#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "torus/integer.hpp"

namespace torus {

/// Settings shared by the command-line tools.  Height bounds and the
/// Bogomolov constant are inputs: nothing computes them.
struct Config {
  std::uint64_t trial_division_bound = kDefaultTrialBound;
  std::optional<double> height_bound;
  std::optional<double> bogomolov_constant;
  long search_bound = 2;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::size_t samples = 200;
  std::size_t digit_cap = 2'000'000;
  double target_err = 1e-6;
};

/// "key = value" lines; '#' starts a comment.  Throws ParseError on unknown
/// keys, malformed values and non-positive bounds.
Config parse_config(const std::string& text, Config base = {});
Config load_config(const std::string& path, Config base = {});

}  // namespace torus
