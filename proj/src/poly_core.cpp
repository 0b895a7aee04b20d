#include "unitpoly/poly_core.hpp"

#include <string>
#include <utility>

#include "unitpoly/error.hpp"

namespace unitpoly {

namespace {

// (x + 1)(x + 3)...(x + 2m - 1) mod 2^n, monic of degree m.
ResiduePoly odd_shift_product(unsigned m, unsigned n) {
  ResiduePoly f{Residue::from_u64(n, 1)};
  for (unsigned j = 1; j <= m; ++j) {
    const Residue c = Residue::from_u64(n, 2 * std::uint64_t{j} - 1);
    f.push_back(Residue(n));
    for (std::size_t k = f.size() - 1; k > 0; --k) f[k] = f[k - 1] + c * f[k];
    f[0] = c * f[0];
  }
  return f;
}

// Exact quotient of a monic polynomial by (x + c).
ResiduePoly divide_by_linear(const ResiduePoly& g, const Residue& c) {
  const std::size_t m = g.size() - 1;
  ResiduePoly q(m, Residue(c.modulus_bits()));
  q[m - 1] = g[m];
  for (std::size_t j = m - 1; j > 0; --j) q[j - 1] = g[j] - c * q[j];
  return q;
}

bool odd_sum(const IntPoly& p, std::size_t start, std::size_t step) {
  mpz_class sum = 0;
  const auto& c = p.coeffs();
  for (std::size_t i = start; i < c.size(); i += step) sum += c[i];
  return mpz_odd_p(sum.get_mpz_t()) != 0;
}

bool permutes_ring(const IntPoly& p) {
  // a_1 odd; a_2 + a_4 + ... even; a_3 + a_5 + ... even
  return mpz_odd_p(p.coeff(1).get_mpz_t()) != 0 && !odd_sum(p, 2, 2) && !odd_sum(p, 3, 2);
}

}  // namespace

ResiduePoly to_residue_poly(const IntPoly& p, unsigned n) {
  ResiduePoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(Residue::from_mpz(n, c));
  return out;
}

Residue horner(std::span<const Residue> coeffs, const Residue& a) {
  Residue acc(a.modulus_bits());
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    acc *= a;
    acc += coeffs[i];
  }
  return acc;
}

ReducedPoly::ReducedPoly(const Context& ctx, ResiduePoly coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ctx.max_degree() + 1) {
    fail(ErrorCode::kInvalidArgument, "reduced polynomial needs exactly " + std::to_string(ctx.max_degree() + 1) +
                                          " coefficients, got " + std::to_string(coeffs_.size()));
  }
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].modulus_bits() != ctx.n()) fail(ErrorCode::kInvalidArgument, "coefficient modulus mismatch");
    if (coeffs_[i] != coeffs_[i].truncated(ctx.coeff_bits(i))) {
      fail(ErrorCode::kInvalidArgument, "coefficient " + std::to_string(i) + " = " + coeffs_[i].to_string() +
                                            " is outside [0, 2^" + std::to_string(ctx.coeff_bits(i)) + ")");
    }
  }
}

std::size_t ReducedPoly::degree() const {
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (!coeffs_[i].is_zero()) return i;
  }
  return 0;
}

IntPoly ReducedPoly::to_int_poly() const {
  std::vector<mpz_class> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) out.push_back(c.to_mpz());
  return IntPoly(std::move(out));
}

std::string ReducedPoly::to_string() const {
  std::string out;
  const std::size_t top = degree();
  for (std::size_t i = 0; i <= top; ++i) {
    if (i != 0) out += ',';
    out += coeffs_[i].to_string();
  }
  return out;
}

std::strong_ordering operator<=>(const ReducedPoly& a, const ReducedPoly& b) {
  for (std::size_t i = 0; i < a.coeffs_.size() && i < b.coeffs_.size(); ++i) {
    if (auto c = a.coeffs_[i] <=> b.coeffs_[i]; c != 0) return c;
  }
  return a.coeffs_.size() <=> b.coeffs_.size();
}

IdealGenerators ideal_generators(const Context& ctx) {
  const unsigned n = ctx.n();
  const unsigned d = ctx.max_degree();
  IdealGenerators gens;
  gens.polys.push_back(IntPoly::constant(mpz_class(1) << n));
  ResiduePoly product{ctx.one()};
  for (unsigned i = 1; i <= d + 1; ++i) {
    const Residue c = ctx.residue(2 * std::uint64_t{i} - 1);
    product.push_back(ctx.zero());
    for (std::size_t k = product.size() - 1; k > 0; --k) product[k] = product[k - 1] + c * product[k];
    product[0] = c * product[0];
    const unsigned scale = i <= d ? ctx.coeff_bits(i) : 0;
    std::vector<mpz_class> coeffs;
    for (const auto& r : product) coeffs.push_back(r.shifted_left(scale).to_mpz());
    gens.polys.emplace_back(std::move(coeffs));
  }
  return gens;
}

Residue eval(const IntPoly& p, const Residue& a) { return horner(to_residue_poly(p, a.modulus_bits()), a); }

Residue eval(const ReducedPoly& p, const Residue& a) {
  if (p.n() != a.modulus_bits()) fail(ErrorCode::kInvalidArgument, "evaluation point has the wrong modulus");
  return horner(p.coeffs(), a);
}

bool induces_function_on_units(const IntPoly& p) { return odd_sum(p, 0, 1); }

bool induces_permutation_on_units(const IntPoly& p) { return induces_function_on_units(p) && odd_sum(p, 1, 2); }

bool rivest_permutes_ring(const IntPoly& p) {
  if (!p.degree() || *p.degree() < 1) {
    fail(ErrorCode::kInvalidArgument, "permutation criterion needs degree >= 1");
  }
  return permutes_ring(p);
}

bool bivariate_quasigroup_check(const BivariatePoly& p, unsigned n) {
  if (n == 0) fail(ErrorCode::kInvalidArgument, "modulus exponent must be positive");
  for (const IntPoly& s : {p.specialize_y(0), p.specialize_y(1), p.specialize_x(0), p.specialize_x(1)}) {
    if (!s.degree() || *s.degree() < 1 || !permutes_ring(s)) return false;
  }
  return true;
}

ReducedPoly reduce(const IntPoly& p, const Context& ctx) { return reduce(to_residue_poly(p, ctx.n()), ctx); }

ReducedPoly reduce(ResiduePoly a, const Context& ctx) {
  const unsigned n = ctx.n();
  const unsigned d = ctx.max_degree();
  for (auto& c : a) {
    if (c.modulus_bits() != n) fail(ErrorCode::kInvalidArgument, "coefficient modulus mismatch");
  }

  // Lower the degree with the monic generator P_{n,d+1}.
  ResiduePoly monic = odd_shift_product(d + 1, n);
  while (a.size() > d + 1) {
    const std::size_t top = a.size() - 1;
    const Residue lead = a[top];
    if (!lead.is_zero()) {
      const std::size_t base = top - (d + 1);
      for (std::size_t j = 0; j <= d + 1; ++j) a[base + j] -= lead * monic[j];
    }
    a.pop_back();
  }
  a.resize(d + 1, Residue(n));

  // Bring coefficients into range from the top down; P_{n,i} only touches
  // indices <= i, so one descending pass suffices.
  ResiduePoly factor = std::move(monic);
  for (std::size_t i = d + 1; i-- > 0;) {
    factor = divide_by_linear(factor, ctx.residue(2 * i + 1));
    const unsigned bits = ctx.coeff_bits(i);
    const Residue quotient = a[i].shifted_right(bits);
    if (quotient.is_zero()) continue;
    const Residue multiple = quotient.shifted_left(bits);
    for (std::size_t j = 0; j <= i; ++j) a[j] -= multiple * factor[j];
  }
  return ReducedPoly(ctx, std::move(a));
}

bool equivalent(const IntPoly& p, const IntPoly& t, const Context& ctx) { return reduce(p, ctx) == reduce(t, ctx); }

IntPoly conjugate_to_nonunits(const IntPoly& h) {
  const auto& c = h.coeffs();
  std::vector<mpz_class> acc;
  for (std::size_t i = c.size(); i-- > 0;) {
    // acc = acc * (x + 1) + c[i]
    acc.emplace_back(0);
    for (std::size_t k = acc.size() - 1; k > 0; --k) acc[k] += acc[k - 1];
    acc[0] += c[i];
  }
  if (acc.empty()) acc.emplace_back(0);
  acc[0] -= 1;
  return IntPoly(std::move(acc));
}

namespace {

std::size_t indicator_degree(unsigned n) {
  if (n == 2) return 2;
  if (n == 3) return 4;
  if (n - 2 >= 63 || (std::size_t{1} << (n - 2)) > kIndicatorDegreeLimit) {
    fail(ErrorCode::kBudgetExceeded, "indicator polynomial degree 2^" + std::to_string(n - 2) + " exceeds the limit");
  }
  return std::size_t{1} << (n - 2);
}

}  // namespace

std::pair<IntPoly, IntPoly> indicator_polys(const Context& ctx) {
  IntPoly v0 = IntPoly::monomial(1, indicator_degree(ctx.n()));
  IntPoly v1 = IntPoly::constant(1) - v0;
  return {std::move(v0), std::move(v1)};
}

IntPoly glue_polynomial(const IntPoly& p, const IntPoly& h, const Context& ctx) {
  if (!induces_function_on_units(p) || !induces_function_on_units(h)) {
    fail(ErrorCode::kNotAUnitFunction, "both polynomials must map Q_n into Q_n");
  }
  const std::size_t m = indicator_degree(ctx.n());
  const IntPoly h_conj = conjugate_to_nonunits(h);
  // P*V0 + H'*V1 with V0 = x^m, V1 = 1 - x^m.
  return h_conj + (p - h_conj).shifted(m);
}

}  // namespace unitpoly
