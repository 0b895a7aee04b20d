#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "unitpoly/context.hpp"
#include "unitpoly/int_poly.hpp"
#include "unitpoly/poly_core.hpp"
#include "unitpoly/units.hpp"

namespace unitpoly::testing {

inline IntPoly poly(std::initializer_list<long> coeffs) {
  std::vector<mpz_class> out;
  for (long c : coeffs) out.emplace_back(c);
  return IntPoly(std::move(out));
}

inline IntPoly poly(const std::vector<std::uint64_t>& coeffs) {
  std::vector<mpz_class> out;
  for (auto c : coeffs) out.emplace_back(static_cast<unsigned long>(c));
  return IntPoly(std::move(out));
}

inline std::vector<UnitResidue> units(const Context& ctx, std::initializer_list<std::uint64_t> values) {
  std::vector<UnitResidue> out;
  for (auto v : values) out.emplace_back(ctx.residue(v));
  return out;
}

inline UnitResidue random_unit(unsigned n, std::mt19937_64& rng) {
  Residue r = Residue::random(n, n, rng);
  r.set_bit(0);
  return UnitResidue(std::move(r));
}

inline IntPoly random_int_poly(std::size_t max_degree, unsigned bits, std::mt19937_64& rng) {
  std::vector<mpz_class> coeffs;
  const std::size_t degree = rng() % (max_degree + 1);
  for (std::size_t i = 0; i <= degree; ++i) coeffs.push_back(Residue::random(bits, bits, rng).to_mpz());
  return IntPoly(std::move(coeffs));
}

/// A uniformly random reduced polynomial with odd a_0 and odd a_1 + a_2 + ...
/// so that it permutes the units.
inline ReducedPoly random_permutational(const Context& ctx, std::mt19937_64& rng) {
  while (true) {
    ResiduePoly coeffs;
    for (unsigned i = 0; i <= ctx.max_degree(); ++i) coeffs.push_back(Residue::random(ctx.n(), ctx.coeff_bits(i), rng));
    ReducedPoly p(ctx, coeffs);
    if (induces_permutation_on_units(p.to_int_poly())) return p;
  }
}

}  // namespace unitpoly::testing
