#pragma once

#include <stdexcept>
#include <string>

namespace geneo {

enum class ErrorKind {
  MalformedInput,
  Parameter,
  Shape,
  MalformedOperation,
  MalformedOperator,
  Membership,
  Resolution,
  Precondition,
  InternalConsistency,
  Unsaturated,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

inline const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::MalformedInput: return "malformed input";
    case ErrorKind::Parameter: return "parameter error";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::MalformedOperation: return "malformed operation";
    case ErrorKind::MalformedOperator: return "malformed operator";
    case ErrorKind::Membership: return "membership error";
    case ErrorKind::Resolution: return "resolution error";
    case ErrorKind::Precondition: return "precondition failed";
    case ErrorKind::InternalConsistency: return "internal consistency error";
    case ErrorKind::Unsaturated: return "unsaturated";
  }
  return "error";
}

}  // namespace geneo
