#ifndef POTCONST_ERROR_HPP_
#define POTCONST_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace potconst {

enum class ErrorKind {
  InvalidSet,
  EmptyTuple,
  ZeroCapacity,
  InvalidMeasure,
  PoolTooSmall,
  NotAdmissible,
  UnsupportedWeightKind,
  BadM,
  BadDegrees,
  BadRadii,
  EmptyFactor,
  ZeroNorm,
  BadSequence,
  BadExponent,
  InvalidInput,
};

std::string_view to_string(ErrorKind kind);

/// Every precondition failure in the library surfaces as this exception; the
/// kind identifies which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace potconst

#endif  // POTCONST_ERROR_HPP_
