#pragma once

#include <stdexcept>
#include <string>

namespace gwfrad {

/// Invalid configuration or arguments; maps to CLI exit code 1.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Failure of a numerical procedure (divergence, degenerate data, budget
/// overrun); maps to CLI exit code 2.
class NumericalError : public std::runtime_error {
public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace gwfrad
