#pragma once

#include <stdexcept>
#include <string>

namespace memdrift {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Contract violation or invalid input value.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Least-squares fit requested on data with no spread in the regressor.
class DegenerateFit : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

// The closed-form solution does not apply (state would clip or turn over).
class OracleInvalid : public Error {
 public:
  using Error::Error;
};

// Integration produced a non-finite state.
class NumericalError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  IoError(const std::string& path, const std::string& what)
      : Error(path + ": " + what), path_(path) {}
  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  // line == 0 means the error is not tied to a line
  ConfigError(const std::string& what, int line = 0)
      : Error(line > 0 ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace memdrift
