#pragma once

#include <stdexcept>
#include <string>

namespace okzar {

enum class ErrorKind {
  Input,             // malformed request or argument
  Data,              // variety document violates a model invariant
  ModelViolation,    // computed structure contradicts the chamber model
  Unsupported,       // operation not defined for this input (non-pointed, non-integral, ...)
  Unbounded,         // a slice that was required to be bounded is not
  ContractViolation, // slab preconditions guaranteed by theory were violated
  Internal           // self-check failed
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so the CLI can map it
/// to a stable exit code.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline void require(bool cond, ErrorKind kind, const char* what) {
  if (!cond) throw Error(kind, what);
}
inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace okzar
