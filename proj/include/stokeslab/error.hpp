#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace stokeslab {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Newton iteration exhausted its budget; carries the last residual max-norm.
class ConvergenceFailure : public Error {
 public:
  ConvergenceFailure(const std::string& what, double last_residual, int iterations)
      : Error(what), last_residual_(last_residual), iterations_(iterations) {}

  double last_residual() const noexcept { return last_residual_; }
  int iterations() const noexcept { return iterations_; }

 private:
  double last_residual_;
  int iterations_;
};

class SingularJacobian : public Error {
 public:
  using Error::Error;
};

/// Evaluation requested too close to a tangent pole.
class PoleProximity : public Error {
 public:
  using Error::Error;
};

/// The exponent p = 1 has a logarithmic action; use log_case_check instead.
class LogCase : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace stokeslab
