#include "unitpoly/quasigroup.hpp"

#include <string>
#include <utility>

#include "unitpoly/error.hpp"
#include "unitpoly/solve.hpp"
#include "unitpoly/units.hpp"

namespace unitpoly {

namespace {

void require_permutation(const ReducedPoly& poly, const char* role, std::size_t index) {
  if (!induces_permutation_on_units(poly.to_int_poly())) {
    fail(ErrorCode::kNotAPermutation, std::string(role) + "[" + std::to_string(index) + "] = " + poly.to_string() +
                                          " does not permute Q_n");
  }
}

ReducedPoly random_permutational(const Context& ctx, std::mt19937_64& rng) {
  while (true) {
    ResiduePoly coeffs;
    for (unsigned i = 0; i <= ctx.max_degree(); ++i) coeffs.push_back(Residue::random(ctx.n(), ctx.coeff_bits(i), rng));
    ReducedPoly candidate(ctx, std::move(coeffs));
    if (induces_permutation_on_units(candidate.to_int_poly())) return candidate;
  }
}

nlohmann::json polys_to_json(const std::vector<ReducedPoly>& polys) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& poly : polys) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (std::size_t i = 0; i <= poly.degree(); ++i) coeffs.push_back(poly.coeff(i).to_string());
    out.push_back(std::move(coeffs));
  }
  return out;
}

std::vector<ReducedPoly> polys_from_json(const nlohmann::json& doc, const Context& ctx, const char* field) {
  if (!doc.is_array()) fail(ErrorCode::kInvalidArgument, std::string("field '") + field + "' must be an array");
  std::vector<ReducedPoly> out;
  for (const auto& entry : doc) {
    if (!entry.is_array() || entry.empty()) {
      fail(ErrorCode::kInvalidArgument, std::string("each entry of '") + field + "' must be a non-empty array");
    }
    std::vector<mpz_class> coeffs;
    for (const auto& c : entry) {
      std::string text;
      if (c.is_string()) {
        text = c.get<std::string>();
      } else if (c.is_number_integer()) {
        text = c.dump();
      } else {
        fail(ErrorCode::kInvalidArgument, std::string("coefficients in '") + field + "' must be decimal strings");
      }
      coeffs.push_back(Residue::from_decimal(ctx.n(), text).to_mpz());
    }
    out.push_back(reduce(IntPoly(std::move(coeffs)), ctx));
  }
  return out;
}

void check_carrier(const QuasigroupSpec& spec, std::span<const Residue> args) {
  if (args.size() != spec.arity()) {
    fail(ErrorCode::kInvalidArgument,
         "expected " + std::to_string(spec.arity()) + " arguments, got " + std::to_string(args.size()));
  }
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].modulus_bits() != spec.n()) {
      fail(ErrorCode::kCarrierViolation, "argument " + std::to_string(i + 1) + " has the wrong modulus");
    }
    if (spec.carrier_is_units() && !args[i].is_odd()) {
      fail(ErrorCode::kCarrierViolation, "argument " + std::to_string(i + 1) + " = " + args[i].to_string() +
                                             " is not in Q_n");
    }
  }
}

}  // namespace

std::string_view mode_name(QuasigroupMode mode) {
  switch (mode) {
    case QuasigroupMode::kUnitProduct:
      return "UNIT_PRODUCT";
    case QuasigroupMode::kRingAdditive:
      return "RING_ADDITIVE";
    case QuasigroupMode::kRingGlued:
      return "RING_GLUED";
  }
  return "?";
}

QuasigroupMode parse_mode(std::string_view name) {
  for (auto mode : {QuasigroupMode::kUnitProduct, QuasigroupMode::kRingAdditive, QuasigroupMode::kRingGlued}) {
    if (mode_name(mode) == name) return mode;
  }
  fail(ErrorCode::kInvalidArgument, "unknown quasigroup mode '" + std::string(name) + "'");
}

QuasigroupSpec::QuasigroupSpec(const Context& ctx, QuasigroupMode mode, std::vector<ReducedPoly> p,
                               std::vector<ReducedPoly> h)
    : ctx_(ctx), mode_(mode), p_(std::move(p)), h_(std::move(h)) {
  if (p_.empty()) fail(ErrorCode::kInvalidArgument, "arity must be at least 1");
  if (mode_ == QuasigroupMode::kRingGlued) {
    if (h_.size() != p_.size()) fail(ErrorCode::kInvalidArgument, "glued mode needs one h polynomial per coordinate");
  } else if (!h_.empty()) {
    fail(ErrorCode::kInvalidArgument, "h polynomials are only used in RING_GLUED mode");
  }
  for (std::size_t i = 0; i < p_.size(); ++i) {
    if (p_[i].n() != ctx_.n()) fail(ErrorCode::kInvalidArgument, "polynomial modulus mismatch");
    require_permutation(p_[i], "p", i);
    p_inverse_.push_back(invert_permutation(p_[i].to_int_poly(), ctx_));
  }
  for (std::size_t i = 0; i < h_.size(); ++i) {
    if (h_[i].n() != ctx_.n()) fail(ErrorCode::kInvalidArgument, "polynomial modulus mismatch");
    require_permutation(h_[i], "h", i);
    h_inverse_.push_back(invert_permutation(h_[i].to_int_poly(), ctx_));
  }
}

QuasigroupSpec QuasigroupSpec::random(const Context& ctx, QuasigroupMode mode, std::size_t k, std::mt19937_64& rng) {
  std::vector<ReducedPoly> p;
  std::vector<ReducedPoly> h;
  for (std::size_t i = 0; i < k; ++i) p.push_back(random_permutational(ctx, rng));
  if (mode == QuasigroupMode::kRingGlued) {
    for (std::size_t i = 0; i < k; ++i) h.push_back(random_permutational(ctx, rng));
  }
  return QuasigroupSpec(ctx, mode, std::move(p), std::move(h));
}

QuasigroupSpec QuasigroupSpec::from_json(const nlohmann::json& doc, unsigned max_n) {
  if (!doc.is_object()) fail(ErrorCode::kInvalidArgument, "quasigroup spec must be a JSON object");
  for (const char* field : {"n", "k", "mode", "p"}) {
    if (!doc.contains(field)) fail(ErrorCode::kInvalidArgument, std::string("quasigroup spec lacks '") + field + "'");
  }
  const auto non_negative = [](const nlohmann::json& v) { return v.is_number_integer() && v.get<std::int64_t>() >= 0; };
  if (!non_negative(doc["n"]) || !non_negative(doc["k"]) || !doc["mode"].is_string()) {
    fail(ErrorCode::kInvalidArgument, "fields n, k must be non-negative integers and mode a string");
  }
  const Context ctx(doc["n"].get<unsigned>(), max_n);
  const auto k = doc["k"].get<std::size_t>();
  const QuasigroupMode mode = parse_mode(doc["mode"].get<std::string>());
  std::vector<ReducedPoly> p = polys_from_json(doc["p"], ctx, "p");
  std::vector<ReducedPoly> h;
  if (doc.contains("h")) h = polys_from_json(doc["h"], ctx, "h");
  if (p.size() != k) fail(ErrorCode::kInvalidArgument, "k does not match the number of p polynomials");
  return QuasigroupSpec(ctx, mode, std::move(p), std::move(h));
}

nlohmann::json QuasigroupSpec::to_json() const {
  nlohmann::json doc;
  doc["n"] = ctx_.n();
  doc["k"] = arity();
  doc["mode"] = std::string(mode_name(mode_));
  doc["p"] = polys_to_json(p_);
  if (mode_ == QuasigroupMode::kRingGlued) doc["h"] = polys_to_json(h_);
  return doc;
}

Residue QuasigroupSpec::coordinate_map(std::size_t i, const Residue& a) const {
  if (a.is_odd() || mode_ == QuasigroupMode::kUnitProduct) return eval(p_[i], a);
  const ReducedPoly& conj = mode_ == QuasigroupMode::kRingGlued ? h_[i] : p_[i];
  const Residue one = ctx_.one();
  return eval(conj, a + one) - one;
}

Residue QuasigroupSpec::coordinate_inverse(std::size_t i, const Residue& a) const {
  if (a.is_odd() || mode_ == QuasigroupMode::kUnitProduct) return eval(p_inverse_[i], a);
  const ReducedPoly& conj = mode_ == QuasigroupMode::kRingGlued ? h_inverse_[i] : p_inverse_[i];
  const Residue one = ctx_.one();
  return eval(conj, a + one) - one;
}

Residue qg_apply(const QuasigroupSpec& spec, std::span<const Residue> args) {
  check_carrier(spec, args);
  if (spec.carrier_is_units()) {
    Residue product = spec.context().one();
    for (std::size_t i = 0; i < args.size(); ++i) product *= spec.coordinate_map(i, args[i]);
    return product;
  }
  Residue sum = spec.context().zero();
  for (std::size_t i = 0; i < args.size(); ++i) sum += spec.coordinate_map(i, args[i]);
  return sum;
}

Residue qg_adjoint(const QuasigroupSpec& spec, std::size_t i, std::span<const Residue> args) {
  if (i < 1 || i > spec.arity()) {
    fail(ErrorCode::kInvalidArgument, "coordinate " + std::to_string(i) + " is outside 1.." +
                                          std::to_string(spec.arity()));
  }
  check_carrier(spec, args);
  const std::size_t target = i - 1;
  if (spec.carrier_is_units()) {
    // (p_{i-1}(a_{i-1}))^-1 ... (p_1(a_1))^-1 * a_i * (p_k(a_k))^-1 ... (p_{i+1}(a_{i+1}))^-1
    Residue value = spec.context().one();
    for (std::size_t j = target; j-- > 0;) {
      value *= unit_inverse(UnitResidue(spec.coordinate_map(j, args[j]))).value();
    }
    value *= args[target];
    for (std::size_t j = args.size(); j-- > target + 1;) {
      value *= unit_inverse(UnitResidue(spec.coordinate_map(j, args[j]))).value();
    }
    return spec.coordinate_inverse(target, value);
  }
  Residue value = args[target];
  for (std::size_t j = 0; j < args.size(); ++j) {
    if (j != target) value -= spec.coordinate_map(j, args[j]);
  }
  return spec.coordinate_inverse(target, value);
}

bool qg_latin_check(const QuasigroupSpec& spec, std::uint64_t budget) {
  const unsigned n = spec.n();
  const std::size_t k = spec.arity();
  const unsigned carrier_bits = spec.carrier_is_units() ? n - 1 : n;
  if (static_cast<std::uint64_t>(carrier_bits) * k > 62 ||
      (std::uint64_t{1} << (carrier_bits * k)) > budget) {
    fail(ErrorCode::kBudgetExceeded, "exhaustive check over 2^" + std::to_string(carrier_bits * k) +
                                         " points exceeds the budget");
  }
  const std::uint64_t size = std::uint64_t{1} << carrier_bits;
  const auto element = [&](std::uint64_t index) {
    return Residue::from_u64(n, spec.carrier_is_units() ? 2 * index + 1 : index);
  };
  const auto index_of = [&](const Residue& r) {
    return spec.carrier_is_units() ? r.low_u64() >> 1 : r.low_u64();
  };

  std::vector<std::uint64_t> digits(k, 0);
  std::vector<Residue> args(k, Residue(n));
  const std::uint64_t total = std::uint64_t{1} << (carrier_bits * k);
  std::vector<std::uint64_t> seen(size);
  std::uint64_t stamp = 0;

  for (std::uint64_t point = 0; point < total; ++point) {
    std::uint64_t rest = point;
    for (std::size_t c = 0; c < k; ++c) {
      digits[c] = rest % size;
      rest /= size;
      args[c] = element(digits[c]);
    }
    const Residue value = qg_apply(spec, args);
    if (spec.carrier_is_units() && !value.is_odd()) return false;

    for (std::size_t c = 0; c < k; ++c) {
      // Adjoint round trip at this point.
      std::vector<Residue> adjoint_args = args;
      adjoint_args[c] = value;
      if (qg_adjoint(spec, c + 1, adjoint_args) != args[c]) return false;

      // Each section is swept once, from the point where coordinate c is 0.
      if (digits[c] != 0) continue;
      ++stamp;
      std::vector<Residue> section = args;
      for (std::uint64_t x = 0; x < size; ++x) {
        section[c] = element(x);
        const Residue image = qg_apply(spec, section);
        if (spec.carrier_is_units() && !image.is_odd()) return false;
        std::uint64_t& mark = seen[index_of(image)];
        if (mark == stamp) return false;
        mark = stamp;
      }
    }
  }
  return true;
}

}  // namespace unitpoly
