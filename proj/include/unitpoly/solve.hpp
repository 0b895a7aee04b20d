#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unitpoly/context.hpp"
#include "unitpoly/int_poly.hpp"
#include "unitpoly/poly_core.hpp"
#include "unitpoly/units.hpp"

namespace unitpoly {

/// Claimed values p(1), p(3), ..., p(2 d_n + 1) of a function Q_n -> Q_n.
class ValueTable {
 public:
  /// Throws kInvalidArgument unless there are exactly d_n + 1 entries of
  /// modulus 2^n.
  ValueTable(const Context& ctx, std::vector<UnitResidue> values);

  const std::vector<UnitResidue>& values() const noexcept { return values_; }

 private:
  std::vector<UnitResidue> values_;
};

/// Upper triangular system over Z_{2^n}. After unit rescaling the diagonal
/// entry of row i is exactly 2^pivot_exponents[i] (n marks a zero pivot).
struct TriangularSystem {
  std::vector<ResiduePoly> rows;
  ResiduePoly rhs;
  std::vector<unsigned> pivot_exponents;
};

/// The nodes 1, 3, ..., 2 d_n + 1.
std::vector<UnitResidue> consecutive_nodes(const Context& ctx);

/// Dense row reduction of the Vandermonde system over the given nodes, using
/// only additions of multiples of one row to another, row swaps and
/// rescaling by odd units. Pivots are chosen by least 2-adic valuation.
TriangularSystem row_reduce_vandermonde(std::span<const UnitResidue> nodes, std::span<const Residue> rhs,
                                        const Context& ctx);

/// Back substitution: row i solves 2^s a_i = b with a_i in [0, 2^(n-s)).
/// Throws kInconsistentTable when 2^s does not divide b.
ResiduePoly back_substitute(const TriangularSystem& system);

/// The unique reduced polynomial taking the tabulated values. Throws
/// kInconsistentTable when no polynomial function takes them.
ReducedPoly interpolate(const ValueTable& table, const Context& ctx);

/// Same result through the dense triangular system; quadratic in memory and
/// cubic in time. Kept as a second route for cross-checks.
ReducedPoly interpolate_dense(const ValueTable& table, const Context& ctx);

/// Upper bound on partial solutions carried by interpolate_at_nodes.
inline constexpr std::size_t kNodeSearchLimit = std::size_t{1} << 20;

/// Every reduced polynomial agreeing with `values` at the (distinct, possibly
/// non-consecutive) unit `nodes`, sorted lexicographically by coefficients.
std::vector<ReducedPoly> interpolate_at_nodes(std::span<const UnitResidue> nodes,
                                              std::span<const UnitResidue> values, const Context& ctx,
                                              std::size_t search_limit = kNodeSearchLimit);

/// Reduced polynomial of the compositional inverse of the permutation of Q_n
/// induced by P. Throws kNotAPermutation if P does not permute Q_n.
ReducedPoly invert_permutation(const IntPoly& p, const Context& ctx);

/// Reduced form of 1/P. Throws kNotAUnitFunction if P does not map Q_n
/// into Q_n.
ReducedPoly multiplicative_inverse(const IntPoly& p, const Context& ctx);

/// Reduced form of the product, via integer convolution and reduce.
ReducedPoly multiply_reduced(const ReducedPoly& a, const ReducedPoly& b, const Context& ctx);

}  // namespace unitpoly
