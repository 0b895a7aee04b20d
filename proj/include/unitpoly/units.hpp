#pragma once

#include <cstddef>
#include <vector>

#include "unitpoly/context.hpp"
#include "unitpoly/int_poly.hpp"
#include "unitpoly/residue.hpp"

namespace unitpoly {

/// An odd residue, i.e. an element of the unit group Q_n of Z_{2^n}.
class UnitResidue {
 public:
  /// Throws kInvalidArgument if the value is even.
  explicit UnitResidue(Residue value);

  const Residue& value() const noexcept { return value_; }
  operator const Residue&() const noexcept { return value_; }

  friend bool operator==(const UnitResidue&, const UnitResidue&) = default;
  friend auto operator<=>(const UnitResidue& a, const UnitResidue& b) { return a.value_ <=> b.value_; }

 private:
  Residue value_;
};

/// Inverse of a unit, lifted one bit per step from the root of a*x - 1.
/// Exactly one bit choice survives at each step, so the search never
/// branches and runs in n steps.
UnitResidue unit_inverse(const UnitResidue& a);

/// Maximum number of partial roots the lifting search may carry at once.
inline constexpr std::size_t kHenselFrontierLimit = std::size_t{1} << 20;

/// All x in Z_{2^n} with P(x) = 0 (mod 2^n), found by bit-by-bit lifting
/// that follows every surviving branch. Sorted ascending. Throws
/// kBudgetExceeded when the live frontier would exceed `frontier_limit`.
std::vector<Residue> hensel_roots(const IntPoly& p, unsigned n,
                                  std::size_t frontier_limit = kHenselFrontierLimit);

struct UnitGroupReport {
  unsigned n = 0;
  /// 5^(2^(n-3)) mod 2^n.
  Residue half_order_power;
  /// 2^(n-1) + 1.
  Residue expected_half_order_power;
  bool half_power_matches = false;
  /// 5^(2^(n-2)) == 1 and 5^(2^(n-3)) != 1, so the order is exactly 2^(n-2).
  bool order_is_exact = false;

  bool pass() const noexcept { return half_power_matches && order_is_exact; }
};

/// Self-test of the unit group structure; requires n >= 3.
UnitGroupReport unit_group_order_check(unsigned n);

}  // namespace unitpoly
