#include "unitpoly/error.hpp"

namespace unitpoly {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return "InvalidArgument";
    case ErrorCode::kInconsistentTable:
      return "InconsistentTable";
    case ErrorCode::kNotAPermutation:
      return "NotAPermutation";
    case ErrorCode::kNotAUnitFunction:
      return "NotAUnitFunction";
    case ErrorCode::kBudgetExceeded:
      return "BudgetExceeded";
    case ErrorCode::kCarrierViolation:
      return "CarrierViolation";
    case ErrorCode::kInternal:
      return "Internal";
  }
  return "Internal";
}

}  // namespace unitpoly
