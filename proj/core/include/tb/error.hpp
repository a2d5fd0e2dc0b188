#pragma once

#include <stdexcept>
#include <string>

namespace tb {

// Invalid data or argument values: non-finite inputs, range violations,
// tag mismatches between tasks.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// File and stream failures, including schema/format problems.
class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

// Bad experiment configuration (CLI exit code 1).
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tb
