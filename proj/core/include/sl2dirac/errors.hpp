#pragma once

#include <stdexcept>
#include <string>

namespace sl2dirac {

enum class ErrorKind {
  DimensionMismatch,
  InclusionViolation,
  TruncationTooShallow,
  ParseFailure,
  RelationViolation,
  ExactnessViolation,
  InvalidArgument,
};

/// All library failures are reported through this exception. `kind` lets the
/// CLI map failures onto its exit-code contract.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}

  Error(ErrorKind kind, std::string message, int suggested_depth)
      : std::runtime_error(std::move(message)),
        kind_(kind),
        suggested_depth_(suggested_depth) {}

  ErrorKind kind() const { return kind_; }

  /// For TruncationTooShallow: the smallest depth expected to succeed,
  /// or 0 when no estimate is available.
  int suggested_depth() const { return suggested_depth_; }

 private:
  ErrorKind kind_;
  int suggested_depth_ = 0;
};

}  // namespace sl2dirac
