#pragma once

#include <stdexcept>
#include <string>

namespace symrep {

enum class ErrorCode {
  OutOfRange,
  LoopForbidden,
  KindMismatch,
  EmptyPattern,
  UnknownPredicate,
  NotInvariant,
  NotTransversal,
  EmptySet,
  EmptyMember,
  PartitionMismatch,
  TooLarge,
  BadParam,
  PreconditionViolated,
  ParseError,
};

const char* to_string(ErrorCode code);

/// Library-wide exception. `code()` identifies the contract that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace symrep
