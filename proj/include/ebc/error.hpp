#pragma once

#include <stdexcept>
#include <string>

namespace ebc {

/// Invalid user input: malformed config, out-of-range parameters, bad grids.
class ConfigError : public std::invalid_argument {
public:
  explicit ConfigError(const std::string& what) : std::invalid_argument(what) {}
};

/// A scaling law that no table cell covers, or a failed theorem hypothesis.
class RegimeError : public std::runtime_error {
public:
  explicit RegimeError(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite state or a broken discrete invariant during a solve.
class SolverError : public std::runtime_error {
public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace ebc
