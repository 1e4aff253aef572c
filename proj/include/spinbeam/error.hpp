#pragma once

#include <stdexcept>
#include <string>

namespace spinbeam {

enum class ErrorKind {
  InvalidOrder,
  Domain,
  UnsupportedOrder,
  Singularity,
  InvalidSigma,
  InvalidSpec,
  Convergence,
  Integrand,
  UndefinedPolarization,
  IllConvergedLimit,
  Sampling,
};

const char* to_string(ErrorKind kind) noexcept;

/// Base of every error raised by the library. The kind lets callers (the CLI
/// in particular) map failures to exit codes without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace spinbeam
