#include "unitpoly/units.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "unitpoly/error.hpp"
#include "unitpoly/poly_core.hpp"

namespace unitpoly {

UnitResidue::UnitResidue(Residue value) : value_(std::move(value)) {
  if (!value_.is_odd()) {
    fail(ErrorCode::kInvalidArgument, value_.to_string() + " is not a unit (even residue)");
  }
}

UnitResidue unit_inverse(const UnitResidue& a) {
  const Residue& av = a.value();
  const unsigned n = av.modulus_bits();
  Residue root(n);
  // residual = a*root - 1, kept up to date as bits of the root are fixed
  Residue residual = -Residue::from_u64(n, 1);
  for (unsigned k = 0; k < n; ++k) {
    // Bits below k of the residual are already zero. Setting bit k of the
    // root adds a*2^k, which flips bit k because a is odd.
    if (residual.bit(k)) {
      root.set_bit(k);
      residual += av.shifted_left(k);
    }
  }
  return UnitResidue(std::move(root));
}

std::vector<Residue> hensel_roots(const IntPoly& p, unsigned n, std::size_t frontier_limit) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "modulus exponent must be positive");
  const ResiduePoly coeffs = to_residue_poly(p, n);
  std::vector<Residue> frontier{Residue(n)};
  for (unsigned k = 0; k < n; ++k) {
    std::vector<Residue> next;
    next.reserve(frontier.size());
    for (const Residue& partial : frontier) {
      const Residue with_one = [&] { Residue r = partial; r.set_bit(k); return r; }();
      for (const Residue* candidate : {&partial, &with_one}) {
        if (horner(coeffs, *candidate).divisible_by_pow2(k + 1)) next.push_back(*candidate);
      }
    }
    if (next.size() > frontier_limit) {
      fail(ErrorCode::kBudgetExceeded, "root search frontier exceeded " + std::to_string(frontier_limit) +
                                           " branches at bit " + std::to_string(k));
    }
    frontier = std::move(next);
  }
  std::sort(frontier.begin(), frontier.end());
  return frontier;
}

UnitGroupReport unit_group_order_check(unsigned n) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "unit group check needs n >= 3");
  UnitGroupReport report;
  report.n = n;
  const Residue one = Residue::from_u64(n, 1);
  report.half_order_power = pow2k(Residue::from_u64(n, 5), n - 3);
  report.expected_half_order_power = Residue::power_of_two(n, n - 1) + one;
  report.half_power_matches = report.half_order_power == report.expected_half_order_power;
  const Residue full = pow2k(report.half_order_power, 1);
  report.order_is_exact = full == one && report.half_order_power != one;
  return report;
}

}  // namespace unitpoly
