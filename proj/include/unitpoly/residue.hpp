#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

namespace unitpoly {

/// An element of Z_{2^n}, stored as little-endian 64-bit limbs.
///
/// The value always lies in [0, 2^n); every mutating operation re-masks the
/// top limb, so reduction modulo 2^n never needs a division. Binary operations
/// require both operands to share the same modulus exponent.
class Residue {
 public:
  using Limb = std::uint64_t;

  Residue() = default;
  /// Zero in Z_{2^n}.
  explicit Residue(unsigned n);

  static Residue from_u64(unsigned n, std::uint64_t value);
  /// Reduces an arbitrary (possibly negative) integer into [0, 2^n).
  static Residue from_mpz(unsigned n, const mpz_class& value);
  /// Parses an optionally signed decimal integer and reduces it mod 2^n.
  static Residue from_decimal(unsigned n, std::string_view text);
  /// 2^k mod 2^n.
  static Residue power_of_two(unsigned n, unsigned k);
  /// Uniform in [0, 2^bits), bits <= n.
  static Residue random(unsigned n, unsigned bits, std::mt19937_64& rng);

  unsigned modulus_bits() const noexcept { return n_; }
  std::size_t limb_count() const noexcept { return limbs_.size(); }

  mpz_class to_mpz() const;
  std::string to_string() const;
  /// The low 64 bits of the value.
  std::uint64_t low_u64() const noexcept { return limbs_.empty() ? 0 : limbs_[0]; }

  bool is_zero() const noexcept;
  bool is_odd() const noexcept { return !limbs_.empty() && (limbs_[0] & 1U) != 0; }
  bool bit(unsigned k) const noexcept;
  void set_bit(unsigned k);

  /// Exponent of the largest power of two dividing the value; n for zero.
  unsigned valuation() const noexcept;
  /// True iff 2^s divides the value as an integer in [0, 2^n).
  bool divisible_by_pow2(unsigned s) const noexcept;

  /// Value mod 2^k (k <= n), same modulus exponent.
  Residue truncated(unsigned k) const;
  /// Integer right shift; the result stays in Z_{2^n}.
  Residue shifted_right(unsigned s) const;
  /// Multiplication by 2^s mod 2^n.
  Residue shifted_left(unsigned s) const;

  Residue& operator+=(const Residue& other);
  Residue& operator-=(const Residue& other);
  Residue& operator*=(const Residue& other);
  Residue operator-() const;

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(const Residue& a, const Residue& b);

  friend bool operator==(const Residue& a, const Residue& b) = default;
  /// Orders by integer value; only meaningful for equal modulus exponents.
  friend std::strong_ordering operator<=>(const Residue& a, const Residue& b);

 private:
  void mask() noexcept;

  unsigned n_ = 0;
  std::vector<Limb> limbs_;
};

/// base^exponent mod 2^n by square-and-multiply.
Residue pow(Residue base, const mpz_class& exponent);

/// Repeated squaring: base^(2^k).
Residue pow2k(Residue base, unsigned k);

}  // namespace unitpoly
