#pragma once

#include <stdexcept>
#include <string>

namespace hilbertlab {

enum class ErrorKind {
  DimensionMismatch,
  Domain,
  SingularPoint,
  InvalidArgument,
  NonFinite,
  Unsupported,
  Parse,
  Io,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (the CLI in
/// particular) can map it to an exit status without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::DimensionMismatch: return "dimension mismatch";
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::SingularPoint: return "singular point";
    case ErrorKind::InvalidArgument: return "invalid argument";
    case ErrorKind::NonFinite: return "non-finite value";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::Parse: return "parse error";
    case ErrorKind::Io: return "i/o error";
  }
  return "error";
}

}  // namespace hilbertlab
