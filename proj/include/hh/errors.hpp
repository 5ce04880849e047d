#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hh {

/// Failure categories raised by the library. The CLI maps each kind to an
/// exit code: invalid input is a validation failure, everything else is a
/// numerical failure.
enum class ErrorKind {
  SampleCount,
  Range,
  Domain,
  Tail,
  Stabilization,
  WindingUndefined,
  NonInteger,
  DegenerateRoot,
  NoConvergence,
  MaskCoverage,
  Order,
  Window,
  Conjugate,
  Schema,
  Io,
};

std::string_view to_string(ErrorKind kind);

/// True for errors caused by bad input rather than a numerical breakdown.
bool is_validation_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hh
