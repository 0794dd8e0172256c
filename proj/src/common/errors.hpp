#pragma once

#include <stdexcept>
#include <string>

namespace airi {

enum class ErrorCode {
  invalid_argument,
  config,
  format,
  io,
  divergence,
  convergence,
  certification,
  no_root,
  internal,
};

class Error : public std::runtime_error {
public:
  Error(ErrorCode code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  ErrorCode code() const { return code_; }

private:
  ErrorCode code_;
};

/// Thrown when an iterative estimate ran out of iterations; carries the best value seen.
class ConvergenceError : public Error {
public:
  ConvergenceError(const std::string& msg, double best)
      : Error(ErrorCode::convergence, msg), best_(best) {}
  double best_estimate() const { return best_; }

private:
  double best_;
};

[[noreturn]] inline void throw_invalid(const std::string& msg) {
  throw Error(ErrorCode::invalid_argument, msg);
}
[[noreturn]] inline void throw_format(const std::string& msg) {
  throw Error(ErrorCode::format, msg);
}
[[noreturn]] inline void throw_io(const std::string& msg) {
  throw Error(ErrorCode::io, msg);
}

}  // namespace airi
