#include "unitpoly/context.hpp"

#include <string>

#include "unitpoly/error.hpp"

namespace unitpoly {

std::uint64_t two_adic_valuation_factorial(std::uint64_t i) {
  std::uint64_t total = 0;
  for (std::uint64_t q = i / 2; q != 0; q /= 2) total += q;
  return total;
}

unsigned max_reduced_degree(unsigned n) {
  unsigned d = 0;
  for (unsigned i = 0;; ++i) {
    const std::uint64_t used = i + two_adic_valuation_factorial(i);
    if (used >= n) break;
    d = i;
  }
  return d;
}

Context::Context(unsigned n, unsigned max_n) : n_(n), max_n_(max_n) {
  if (n < 2) {
    fail(ErrorCode::kInvalidArgument, "modulus exponent n must be at least 2, got " + std::to_string(n));
  }
  if (n > max_n) {
    fail(ErrorCode::kInvalidArgument,
         "modulus exponent n=" + std::to_string(n) + " exceeds the configured ceiling " + std::to_string(max_n));
  }
  max_degree_ = max_reduced_degree(n);
  t_table_.reserve(max_degree_ + 2);
  for (unsigned i = 0; i <= max_degree_ + 1; ++i) {
    t_table_.push_back(static_cast<unsigned>(two_adic_valuation_factorial(i)));
  }
}

}  // namespace unitpoly
