#include "hh/errors.hpp"

namespace hh {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SampleCount: return "SampleCountError";
    case ErrorKind::Range: return "RangeError";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::Tail: return "TailError";
    case ErrorKind::Stabilization: return "StabilizationError";
    case ErrorKind::WindingUndefined: return "WindingUndefined";
    case ErrorKind::NonInteger: return "NonIntegerError";
    case ErrorKind::DegenerateRoot: return "DegenerateRoot";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::MaskCoverage: return "MaskCoverageError";
    case ErrorKind::Order: return "OrderError";
    case ErrorKind::Window: return "WindowError";
    case ErrorKind::Conjugate: return "ConjugateError";
    case ErrorKind::Schema: return "schema";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

bool is_validation_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::SampleCount:
    case ErrorKind::Range:
    case ErrorKind::Domain:
    case ErrorKind::Tail:
    case ErrorKind::Order:
    case ErrorKind::Window:
    case ErrorKind::Conjugate:
    case ErrorKind::Schema:
    case ErrorKind::Io:
      return true;
    default:
      return false;
  }
}

}  // namespace hh
