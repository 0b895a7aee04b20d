#include "unitpoly/census.hpp"

#include <string>

#include "unitpoly/context.hpp"
#include "unitpoly/error.hpp"

namespace unitpoly {

namespace {

void require_n(unsigned n) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "counting formulas need n >= 2, got " + std::to_string(n));
}

std::int64_t t_sum(unsigned d) {
  std::int64_t sum = 0;
  for (unsigned i = 0; i <= d; ++i) sum += static_cast<std::int64_t>(two_adic_valuation_factorial(i));
  return sum;
}

// (2n - d)(d + 1), always even.
std::int64_t box_product(unsigned n, unsigned d) {
  return (2 * std::int64_t{n} - d) * (std::int64_t{d} + 1);
}

}  // namespace

std::int64_t count_reduced(unsigned n) {
  require_n(n);
  const unsigned d = max_reduced_degree(n);
  return box_product(n, d) / 2 - 1 - t_sum(d);
}

std::int64_t count_permutational(unsigned n) { return count_reduced(n) - 1; }

std::int64_t count_ring_permutational(unsigned n) {
  require_n(n);
  const unsigned d = max_reduced_degree(n);
  return box_product(n, d) - 3 - 2 * t_sum(d);
}

std::uint64_t beta(std::uint64_t j) {
  if (j < 1) fail(ErrorCode::kInvalidArgument, "beta needs j >= 1");
  // t is non-decreasing and t_{2j} >= j, so binary search on [0, 2j].
  std::uint64_t lo = 0;
  std::uint64_t hi = 2 * j;
  while (lo < hi) {
    const std::uint64_t mid = lo + (hi - lo) / 2;
    if (two_adic_valuation_factorial(mid) >= j) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::int64_t keller_exponent(unsigned n) {
  require_n(n);
  std::int64_t sum = 3;
  for (unsigned j = 3; j <= n; ++j) sum += static_cast<std::int64_t>(beta(j));
  return sum;
}

bool keller_identity_check(unsigned n) {
  require_n(n);
  const unsigned d = max_reduced_degree(n);
  const std::int64_t lhs = 2 * t_sum(d) + (keller_exponent(n) - 3);
  return lhs == box_product(n, d) - 6;
}

CensusReport census(unsigned n) {
  CensusReport report;
  report.n = n;
  report.max_degree = max_reduced_degree(n);
  report.log2_reduced = count_reduced(n);
  report.log2_permutational = count_permutational(n);
  report.log2_ring_permutational = count_ring_permutational(n);
  report.keller_exponent = keller_exponent(n);
  report.identity_ok = keller_identity_check(n);
  return report;
}

}  // namespace unitpoly
