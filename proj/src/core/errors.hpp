#pragma once

#include <stdexcept>
#include <string>

namespace kmchar {

enum class ErrorCode {
  InvalidArgument = 1,
  UnsupportedLevelParity = 2,
  NonUnitLeadingCoefficient = 3,
  NonRegularWeight = 4,
  ParityConflict = 5,
  IdentityViolation = 6,
  InsufficientOrder = 7,
  IncompatibleTruncation = 8,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace kmchar
