#pragma once

#include <cstddef>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "unitpoly/context.hpp"
#include "unitpoly/poly_core.hpp"
#include "unitpoly/residue.hpp"

namespace unitpoly {

enum class QuasigroupMode {
  /// f(a_1..a_k) = p_1(a_1) ... p_k(a_k) on Q_n.
  kUnitProduct,
  /// f = sum of p_i extended to Z_{2^n} by x -> p_i(x + 1) - 1 on even x.
  kRingAdditive,
  /// f = sum of f_{p_i,h_i}: p_i on odd x, h_i(x + 1) - 1 on even x.
  kRingGlued,
};

std::string_view mode_name(QuasigroupMode mode);
/// Accepts UNIT_PRODUCT, RING_ADDITIVE, RING_GLUED.
QuasigroupMode parse_mode(std::string_view name);

/// A huge k-quasigroup defined by permutational reduced polynomials.
/// Compositional inverses of every p_i (and h_i) are computed once at
/// construction; apply and adjoint never invert a polynomial again.
class QuasigroupSpec {
 public:
  /// Throws kInvalidArgument on shape errors and kNotAPermutation when a
  /// polynomial does not permute Q_n. `h` must be empty unless mode is
  /// kRingGlued, where it needs one entry per coordinate.
  QuasigroupSpec(const Context& ctx, QuasigroupMode mode, std::vector<ReducedPoly> p,
                 std::vector<ReducedPoly> h = {});

  /// Coefficients drawn uniformly from their legal ranges, redrawn until the
  /// polynomial permutes Q_n (half of all draws do).
  static QuasigroupSpec random(const Context& ctx, QuasigroupMode mode, std::size_t k, std::mt19937_64& rng);

  /// {n, k, mode, p: [[coeff strings]], h?: [[coeff strings]]}. Polynomials
  /// are reduced on load.
  static QuasigroupSpec from_json(const nlohmann::json& doc, unsigned max_n = Context::kDefaultMaxN);
  nlohmann::json to_json() const;

  const Context& context() const noexcept { return ctx_; }
  unsigned n() const noexcept { return ctx_.n(); }
  std::size_t arity() const noexcept { return p_.size(); }
  QuasigroupMode mode() const noexcept { return mode_; }
  const std::vector<ReducedPoly>& p() const noexcept { return p_; }
  const std::vector<ReducedPoly>& h() const noexcept { return h_; }
  const std::vector<ReducedPoly>& p_inverse() const noexcept { return p_inverse_; }
  const std::vector<ReducedPoly>& h_inverse() const noexcept { return h_inverse_; }

  /// Carrier size is 2^(n-1) for Q_n, 2^n for Z_{2^n}.
  bool carrier_is_units() const noexcept { return mode_ == QuasigroupMode::kUnitProduct; }

  /// The per-coordinate permutation of the carrier and its inverse.
  Residue coordinate_map(std::size_t i, const Residue& a) const;
  Residue coordinate_inverse(std::size_t i, const Residue& a) const;

 private:
  Context ctx_;
  QuasigroupMode mode_;
  std::vector<ReducedPoly> p_;
  std::vector<ReducedPoly> h_;
  std::vector<ReducedPoly> p_inverse_;
  std::vector<ReducedPoly> h_inverse_;
};

/// f(args). Throws kCarrierViolation for arguments outside the carrier.
Residue qg_apply(const QuasigroupSpec& spec, std::span<const Residue> args);

/// The i-th adjoint (1-based): args[i-1] holds the target value t, and the
/// result is the unique b with f(a_1, ..., b, ..., a_k) = t.
Residue qg_adjoint(const QuasigroupSpec& spec, std::size_t i, std::span<const Residue> args);

/// Largest carrier_size^k that qg_latin_check will enumerate.
inline constexpr std::uint64_t kLatinCheckBudget = std::uint64_t{1} << 22;

/// Exhaustively checks that every unary section of f is a permutation and
/// that each adjoint inverts f at every point. Throws kBudgetExceeded when
/// the carrier power exceeds `budget`.
bool qg_latin_check(const QuasigroupSpec& spec, std::uint64_t budget = kLatinCheckBudget);

}  // namespace unitpoly
