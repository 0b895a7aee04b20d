#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "unitpoly/int_poly.hpp"

// Brute-force reference implementations. Everything here works on plain
// 64-bit integers with generic % reduction and naive powers, and shares no
// evaluation or reduction code with the library proper.
namespace unitpoly::oracle {

inline constexpr unsigned kMaxN = 12;

enum class Domain { kUnits, kRing };

/// Values of a function on Q_n (entry j is the image of 2j + 1) or on
/// Z_{2^n} (entry j is the image of j).
struct FunctionTable {
  unsigned n = 0;
  Domain domain = Domain::kUnits;
  std::vector<std::uint64_t> values;

  friend bool operator==(const FunctionTable&, const FunctionTable&) = default;
};

/// Throws kBudgetExceeded for n > kMaxN.
FunctionTable function_of(const IntPoly& p, unsigned n, Domain domain);
FunctionTable function_of(std::span<const std::uint64_t> coeffs, unsigned n, Domain domain);

bool is_permutation(const FunctionTable& table);

/// 2-adic valuation of i!, by counting factors of two in 2, 3, ..., i.
std::uint64_t factorial_two_valuation(std::uint64_t i);

/// Exclusive upper bounds 2^(n - i - t_i) of the reduced coefficient slots.
std::vector<std::uint64_t> reduced_coefficient_bounds(unsigned n);

/// Restartable lexicographic stream (a_0 slowest) over every coefficient
/// vector in the reduced ranges. Limited to n <= 6.
class ReducedStream {
 public:
  explicit ReducedStream(unsigned n);

  /// Writes the next vector into `out`; false once exhausted.
  bool next(std::vector<std::uint64_t>& out);
  void restart();
  std::uint64_t size() const noexcept { return size_; }
  const std::vector<std::uint64_t>& bounds() const noexcept { return bounds_; }

 private:
  std::vector<std::uint64_t> bounds_;
  std::vector<std::uint64_t> current_;
  std::uint64_t size_ = 1;
  bool started_ = false;
  bool done_ = false;
};

struct RingFunctionCensus {
  std::uint64_t functions = 0;
  std::uint64_t permutations = 0;
  /// Only filled when `dedupe` was requested: distinct value vectors seen.
  std::uint64_t distinct = 0;
};

/// Enumerates every polynomial function on Z_{2^n} as a combination of the
/// falling factorials x(x-1)...(x-k+1) with coefficient k taken below
/// 2^n / gcd(2^n, k!), and counts the permutations among them. n <= 5.
RingFunctionCensus ring_function_census(unsigned n, bool dedupe);

}  // namespace unitpoly::oracle
