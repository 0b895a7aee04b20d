#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "unitpoly/residue.hpp"

namespace unitpoly {

/// Exponent of the largest power of two dividing i! (Legendre's sum
/// floor(i/2) + floor(i/4) + ...).
std::uint64_t two_adic_valuation_factorial(std::uint64_t i);

/// Largest i with n - i - t_i > 0: the maximal degree of a reduced
/// polynomial modulo 2^n.
unsigned max_reduced_degree(unsigned n);

/// The ambient ring Z_{2^n} together with the tables every algorithm needs.
/// Immutable after construction and cheap to share by const reference.
class Context {
 public:
  static constexpr unsigned kDefaultMaxN = 4096;

  /// Throws kInvalidArgument unless 2 <= n <= max_n.
  explicit Context(unsigned n, unsigned max_n = kDefaultMaxN);

  unsigned n() const noexcept { return n_; }
  unsigned max_n() const noexcept { return max_n_; }
  /// d_n.
  unsigned max_degree() const noexcept { return max_degree_; }
  /// t_i for 0 <= i <= d_n + 1.
  unsigned t(std::size_t i) const { return t_table_.at(i); }
  const std::vector<unsigned>& t_table() const noexcept { return t_table_; }
  /// n - i - t_i: bit width of the i-th reduced coefficient (i <= d_n).
  unsigned coeff_bits(std::size_t i) const { return n_ - static_cast<unsigned>(i) - t(i); }

  Residue zero() const { return Residue(n_); }
  Residue one() const { return Residue::from_u64(n_, 1); }
  Residue residue(std::uint64_t value) const { return Residue::from_u64(n_, value); }

 private:
  unsigned n_;
  unsigned max_n_;
  unsigned max_degree_;
  std::vector<unsigned> t_table_;
};

}  // namespace unitpoly
