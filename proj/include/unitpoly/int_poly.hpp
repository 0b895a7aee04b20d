#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace unitpoly {

/// A univariate polynomial with arbitrary-precision integer coefficients.
/// Coefficient i multiplies x^i. Trailing zeros are trimmed, so the zero
/// polynomial has no coefficients and no degree.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly monomial(const mpz_class& c, std::size_t degree);
  /// The identity polynomial x.
  static IntPoly x();
  /// Parses "a0,a1,...,ad" (decimal, lowest degree first, signs allowed).
  static IntPoly parse(std::string_view text);

  std::optional<std::size_t> degree() const;
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Zero for indices past the degree.
  mpz_class coeff(std::size_t i) const;
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }

  /// Canonical text form, lowest degree first; "0" for the zero polynomial.
  std::string to_string() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(const mpz_class& c, const IntPoly& p);
  friend bool operator==(const IntPoly& a, const IntPoly& b);

  /// Multiplication by x^k.
  IntPoly shifted(std::size_t k) const;

 private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

/// Bivariate integer polynomial stored as a dense coefficient matrix:
/// coeffs[i][j] multiplies x^i y^j. Rows may have different lengths.
struct BivariatePoly {
  std::vector<std::vector<mpz_class>> coeffs;

  /// Parses rows separated by ';', each row a comma-separated list
  /// "c_i0,c_i1,..." for x^i y^0, x^i y^1, ...
  static BivariatePoly parse(std::string_view text);

  mpz_class coeff(std::size_t i, std::size_t j) const;
  std::size_t x_extent() const { return coeffs.size(); }
  std::size_t y_extent() const;

  /// P(x, c) and P(c, y) for a constant integer c.
  IntPoly specialize_y(const mpz_class& y) const;
  IntPoly specialize_x(const mpz_class& x) const;
};

}  // namespace unitpoly
