#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace unitpoly {

enum class ErrorCode {
  kInvalidArgument,
  kInconsistentTable,
  kNotAPermutation,
  kNotAUnitFunction,
  kBudgetExceeded,
  kCarrierViolation,
  kInternal,
};

std::string_view error_code_name(ErrorCode code);

// Every domain failure in the library is reported through this type; the
// code names the violated precondition so the CLI can map it to an exit
// status and a machine-readable error object.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace unitpoly
