#pragma once

#include <stdexcept>
#include <string>

namespace vecdrive {

// Configuration parsing/validation failure. `field_path` is the dotted path
// of the offending entry (e.g. "env.num_envs").
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field_path, const std::string& what)
      : std::runtime_error(field_path + ": " + what),
        field_path_(std::move(field_path)) {}
  const std::string& field_path() const { return field_path_; }

 private:
  std::string field_path_;
};

// Physics integration produced NaN/Inf. Usually means dt is too large or the
// parameter set is degenerate.
class NonFiniteStateError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Training loss became NaN/Inf.
class NonFiniteLossError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InvalidDimsError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class OverlapError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class InvalidRangeError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class BatchSizeMismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class CheckpointMismatchError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

// File parsing failure with 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& file, long line, const std::string& what)
      : std::runtime_error(file + ":" + std::to_string(line) + ": " + what),
        line_(line) {}
  long line() const { return line_; }

 private:
  long line_;
};

}  // namespace vecdrive
