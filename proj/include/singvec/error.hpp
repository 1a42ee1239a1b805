#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace singvec {

enum class ErrorKind {
  InvalidParams,
  IsotropicCoroot,
  ClosureFailure,
  NotDivisible,
  WrongOrder,
  Inhomogeneous,
  ParityViolation,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (and the CLI exit-code mapping) can dispatch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace singvec
