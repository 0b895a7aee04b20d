#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "unitpoly/context.hpp"
#include "unitpoly/int_poly.hpp"
#include "unitpoly/residue.hpp"

namespace unitpoly {

/// Coefficients already reduced modulo 2^n, lowest degree first. The working
/// representation of every hot path; not necessarily trimmed.
using ResiduePoly = std::vector<Residue>;

ResiduePoly to_residue_poly(const IntPoly& p, unsigned n);

/// Horner evaluation of a coefficient vector at `a`, mod 2^n.
Residue horner(std::span<const Residue> coeffs, const Residue& a);

/// The canonical representative of a polynomial function on Q_n: exactly
/// d_n + 1 coefficients with coefficient i in [0, 2^(n - i - t_i)).
/// Structural equality is functional equality on Q_n.
class ReducedPoly {
 public:
  /// Validates length and coefficient ranges; throws kInvalidArgument.
  ReducedPoly(const Context& ctx, ResiduePoly coeffs);

  unsigned n() const noexcept { return coeffs_.front().modulus_bits(); }
  const ResiduePoly& coeffs() const noexcept { return coeffs_; }
  const Residue& coeff(std::size_t i) const { return coeffs_.at(i); }
  /// Degree of the stored polynomial ignoring zero padding; 0 for constants.
  std::size_t degree() const;

  IntPoly to_int_poly() const;
  /// Lowest degree first, trailing zeros trimmed ("0" for zero).
  std::string to_string() const;

  friend bool operator==(const ReducedPoly&, const ReducedPoly&) = default;
  /// Lexicographic on (a_0, a_1, ...).
  friend std::strong_ordering operator<=>(const ReducedPoly& a, const ReducedPoly& b);

 private:
  ResiduePoly coeffs_;
};

/// P_{n,0}, ..., P_{n,d_n+1}, coefficients reduced mod 2^n.
struct IdealGenerators {
  std::vector<IntPoly> polys;
};

IdealGenerators ideal_generators(const Context& ctx);

Residue eval(const IntPoly& p, const Residue& a);
Residue eval(const ReducedPoly& p, const Residue& a);

/// Coefficient sum is odd, i.e. P maps Q_n into Q_n.
bool induces_function_on_units(const IntPoly& p);
/// Maps Q_n into itself and the odd-indexed coefficient sum is odd.
bool induces_permutation_on_units(const IntPoly& p);
/// Permutes all of Z_{2^n}: a_1 odd, even-indexed (>= 2) and odd-indexed
/// (>= 3) coefficient sums both even. Throws kInvalidArgument for degree < 1.
bool rivest_permutes_ring(const IntPoly& p);
/// All four specializations P(x,0), P(x,1), P(0,y), P(1,y) permute Z_{2^n}.
/// A constant specialization counts as a failure rather than an error.
bool bivariate_quasigroup_check(const BivariatePoly& p, unsigned n);

/// The unique reduced polynomial functionally equivalent to P on Q_n.
/// Accepts any integer polynomial (negative coefficients included).
ReducedPoly reduce(const IntPoly& p, const Context& ctx);
ReducedPoly reduce(ResiduePoly coeffs, const Context& ctx);

/// P and T induce the same function on Q_n.
bool equivalent(const IntPoly& p, const IntPoly& t, const Context& ctx);

/// H(x + 1) - 1, exact over the integers.
IntPoly conjugate_to_nonunits(const IntPoly& h);

/// Degree cap for the explicit indicator and glue polynomials, whose degree
/// grows like 2^(n-2).
inline constexpr std::size_t kIndicatorDegreeLimit = std::size_t{1} << 24;

/// (V0, V1): V0 is 1 on Q_n and 0 on its complement, V1 = 1 - V0.
/// Throws kBudgetExceeded past kIndicatorDegreeLimit.
std::pair<IntPoly, IntPoly> indicator_polys(const Context& ctx);

/// A single polynomial inducing P on Q_n and H(x+1)-1 on the non-units.
/// Requires both P and H to map Q_n into itself (kNotAUnitFunction).
IntPoly glue_polynomial(const IntPoly& p, const IntPoly& h, const Context& ctx);

}  // namespace unitpoly
