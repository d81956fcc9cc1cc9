// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace fogndt {

// Malformed or incomplete run configuration (bad key, bad value, missing
// required field). Carries the 1-based line number when the problem is tied
// to a specific config line; line 0 means the file as a whole.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(int line, const std::string& message)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                    : message),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// Numerical breakdown inside a simulation or fit (rank-deficient channel,
// diverging cross-check). Distinct from ConfigError so the CLI can map it to
// its own exit status.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& message) : std::runtime_error(message) {}
};

}  // namespace fogndt
