#pragma once

#include <cstdint>

namespace unitpoly {

// Counts of polynomial-function classes modulo 2^n. All counts are returned
// as base-2 exponents; the integers themselves overflow machine words almost
// immediately. Every function requires n >= 2.

/// e with |RP_n| = 2^e: reduced polynomials inducing maps Q_n -> Q_n.
std::int64_t count_reduced(unsigned n);
/// Exponent of the number of permutations of Q_n induced by polynomials.
std::int64_t count_permutational(unsigned n);
/// Exponent of the number of permutations of Z_{2^n} induced by polynomials.
std::int64_t count_ring_permutational(unsigned n);

/// Smallest s with 2^j dividing s!. Requires j >= 1.
std::uint64_t beta(std::uint64_t j);
/// 3 + sum_{j=3}^{n} beta_j, the exponent of the classical ring count.
std::int64_t keller_exponent(unsigned n);
/// 2 sum t_i + sum beta_j == (2n - d_n)(d_n + 1) - 6.
bool keller_identity_check(unsigned n);

struct CensusReport {
  unsigned n = 0;
  unsigned max_degree = 0;
  std::int64_t log2_reduced = 0;
  std::int64_t log2_permutational = 0;
  std::int64_t log2_ring_permutational = 0;
  std::int64_t keller_exponent = 0;
  bool identity_ok = false;
};

CensusReport census(unsigned n);

}  // namespace unitpoly
