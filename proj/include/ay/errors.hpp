#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ay {

enum class ErrorCode {
  NonSquare,
  NotAContraction,
  NoSolution,
  IndexOutOfRange,
  DimensionMismatch,
  OrderTooSmall,
  NotToeplitz,
  BandExceeded,
  InvalidSolution,
  NotCoinvariant,
  NotAYIsometry,
  WindowTooSmall,
  HasUnitaryPart,
  NotInner,
  NotInvariant,
  NotPure,
  ModelMismatch,
  ZeroTooCloseToCircle,
  BandwidthTooLarge,
  UnknownKind,
  InvalidArgument,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library. `value` carries the measured quantity
/// that tripped the check (a residual, a norm, a deviation) when one exists,
/// and `index` the 1-based tuple index for per-component failures.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, double value = 0.0, int index = 0)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code),
        value_(value),
        index_(index) {}

  ErrorCode code() const noexcept { return code_; }
  double value() const noexcept { return value_; }
  int index() const noexcept { return index_; }

 private:
  ErrorCode code_;
  double value_;
  int index_;
};

}  // namespace ay
