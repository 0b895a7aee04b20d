#include "unitpoly/solve.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <utility>

#include "unitpoly/error.hpp"

namespace unitpoly {

namespace {

Residue odd_part_inverse(const Residue& value, unsigned valuation) {
  return unit_inverse(UnitResidue(value.shifted_right(valuation))).value();
}

// Solves V a = values for a Vandermonde matrix V in Newton form: the matrix
// factors as L * H where L[i][k] = N_k(x_i), N_k(x) = (x - x_0)...(x - x_{k-1}),
// and H is unit upper triangular. Forward elimination on L is the same
// sequence of row operations as the dense reduction but touches O(d^2)
// entries. Requires v(N_k(x_i)) >= v(N_k(x_k)) for i > k, which holds for
// consecutive odd nodes and for their images under a permutation of Q_n.
// The diagonal valuations must equal k + t_k.
ResiduePoly newton_solve(std::span<const Residue> nodes, std::span<const Residue> values, const Context& ctx) {
  const unsigned n = ctx.n();
  const std::size_t size = nodes.size();
  ResiduePoly residual(values.begin(), values.end());
  ResiduePoly basis_at(size, ctx.one());  // N_k(x_i) for i >= k
  ResiduePoly newton(size, ctx.zero());

  for (std::size_t k = 0; k < size; ++k) {
    const Residue& pivot = basis_at[k];
    const unsigned s = pivot.valuation();
    if (s != k + ctx.t(k)) {
      fail(ErrorCode::kInternal, "pivot " + std::to_string(k) + " has 2-adic valuation " + std::to_string(s) +
                                     ", expected " + std::to_string(k + ctx.t(k)));
    }
    if (!residual[k].divisible_by_pow2(s)) {
      fail(ErrorCode::kInconsistentTable, "no polynomial function takes these values: 2^" + std::to_string(s) +
                                              " does not divide the reduced right-hand side of row " +
                                              std::to_string(k));
    }
    newton[k] = (residual[k].shifted_right(s) * odd_part_inverse(pivot, s)).truncated(n - s);
    for (std::size_t i = k + 1; i < size; ++i) {
      residual[i] -= newton[k] * basis_at[i];
      basis_at[i] *= nodes[i] - nodes[k];
    }
  }

  // Expand sum_k newton[k] * N_k(x) into monomial coefficients.
  ResiduePoly poly{newton[size - 1]};
  for (std::size_t k = size - 1; k-- > 0;) {
    poly.push_back(ctx.zero());
    for (std::size_t j = poly.size() - 1; j > 0; --j) poly[j] = poly[j - 1] - nodes[k] * poly[j];
    poly[0] = newton[k] - nodes[k] * poly[0];
  }
  return poly;
}

std::vector<Residue> node_values(std::span<const UnitResidue> nodes) {
  std::vector<Residue> out;
  out.reserve(nodes.size());
  for (const auto& u : nodes) out.push_back(u.value());
  return out;
}

}  // namespace

ValueTable::ValueTable(const Context& ctx, std::vector<UnitResidue> values) : values_(std::move(values)) {
  if (values_.size() != ctx.max_degree() + 1) {
    fail(ErrorCode::kInvalidArgument, "value table needs exactly d_n + 1 = " + std::to_string(ctx.max_degree() + 1) +
                                          " entries, got " + std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.value().modulus_bits() != ctx.n()) fail(ErrorCode::kInvalidArgument, "table entry has the wrong modulus");
  }
}

std::vector<UnitResidue> consecutive_nodes(const Context& ctx) {
  std::vector<UnitResidue> nodes;
  for (unsigned j = 0; j <= ctx.max_degree(); ++j) nodes.emplace_back(ctx.residue(2 * std::uint64_t{j} + 1));
  return nodes;
}

TriangularSystem row_reduce_vandermonde(std::span<const UnitResidue> nodes, std::span<const Residue> rhs,
                                        const Context& ctx) {
  if (nodes.size() != rhs.size() || nodes.empty()) {
    fail(ErrorCode::kInvalidArgument, "node and right-hand side counts must match and be non-empty");
  }
  const unsigned n = ctx.n();
  const std::size_t size = nodes.size();
  TriangularSystem sys;
  sys.rhs.assign(rhs.begin(), rhs.end());
  for (const auto& node : nodes) {
    ResiduePoly row{ctx.one()};
    for (std::size_t j = 1; j < size; ++j) row.push_back(row.back() * node.value());
    sys.rows.push_back(std::move(row));
  }

  for (std::size_t col = 0; col < size; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < size; ++r) {
      if (sys.rows[r][col].valuation() < sys.rows[best][col].valuation()) best = r;
    }
    std::swap(sys.rows[col], sys.rows[best]);
    std::swap(sys.rhs[col], sys.rhs[best]);
    const unsigned s = sys.rows[col][col].valuation();
    sys.pivot_exponents.push_back(s);
    if (s >= n) continue;

    const Residue scale = odd_part_inverse(sys.rows[col][col], s);
    for (auto& entry : sys.rows[col]) entry *= scale;
    sys.rhs[col] *= scale;

    for (std::size_t r = col + 1; r < size; ++r) {
      const Residue factor = sys.rows[r][col].shifted_right(s);
      if (factor.is_zero()) continue;
      for (std::size_t j = col; j < size; ++j) sys.rows[r][j] -= factor * sys.rows[col][j];
      sys.rhs[r] -= factor * sys.rhs[col];
    }
  }
  return sys;
}

ResiduePoly back_substitute(const TriangularSystem& system) {
  const std::size_t size = system.rows.size();
  const unsigned n = system.rhs.front().modulus_bits();
  ResiduePoly solution(size, Residue(n));
  for (std::size_t i = size; i-- > 0;) {
    Residue b = system.rhs[i];
    for (std::size_t j = i + 1; j < size; ++j) b -= system.rows[i][j] * solution[j];
    const unsigned s = system.pivot_exponents[i];
    if (!b.divisible_by_pow2(s)) {
      fail(ErrorCode::kInconsistentTable, "row " + std::to_string(i) + " reads 2^" + std::to_string(s) +
                                              " a = " + b.to_string() + ", which has no solution");
    }
    solution[i] = b.shifted_right(s);
  }
  return solution;
}

ReducedPoly interpolate(const ValueTable& table, const Context& ctx) {
  const auto nodes = node_values(consecutive_nodes(ctx));
  const auto values = node_values(table.values());
  return reduce(newton_solve(nodes, values, ctx), ctx);
}

ReducedPoly interpolate_dense(const ValueTable& table, const Context& ctx) {
  const auto nodes = consecutive_nodes(ctx);
  const auto values = node_values(table.values());
  const TriangularSystem sys = row_reduce_vandermonde(nodes, values, ctx);
  return ReducedPoly(ctx, back_substitute(sys));
}

std::vector<ReducedPoly> interpolate_at_nodes(std::span<const UnitResidue> nodes,
                                              std::span<const UnitResidue> values, const Context& ctx,
                                              std::size_t search_limit) {
  if (nodes.size() != values.size()) fail(ErrorCode::kInvalidArgument, "node and value counts differ");
  const unsigned n = ctx.n();
  const std::size_t width = ctx.max_degree() + 1;
  const std::size_t m = nodes.size();
  for (std::size_t a = 0; a < m; ++a) {
    if (nodes[a].value().modulus_bits() != n || values[a].value().modulus_bits() != n) {
      fail(ErrorCode::kInvalidArgument, "node or value has the wrong modulus");
    }
    for (std::size_t b = a + 1; b < m; ++b) {
      if (nodes[a] == nodes[b]) fail(ErrorCode::kInvalidArgument, "nodes must be distinct");
    }
  }

  // powers[j][i] = x_j^i
  std::vector<ResiduePoly> powers(m);
  for (std::size_t j = 0; j < m; ++j) {
    powers[j].push_back(ctx.one());
    for (std::size_t i = 1; i < width; ++i) powers[j].push_back(powers[j].back() * nodes[j].value());
  }

  // Lift solutions one bit at a time. Modulo 2 every row of the system is
  // all ones (odd nodes), so bit k of the coefficients is constrained only
  // by the parity of the chosen bits against bit k of each residual.
  struct Partial {
    ResiduePoly coeffs;
    ResiduePoly residual;  // R(x_j) - v_j
  };
  std::vector<Partial> frontier(1);
  frontier[0].coeffs.assign(width, ctx.zero());
  for (std::size_t j = 0; j < m; ++j) frontier[0].residual.push_back(-values[j].value());

  for (unsigned k = 0; k < n; ++k) {
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < width; ++i) {
      if (ctx.coeff_bits(i) > k) free.push_back(i);
    }
    if (free.size() >= 63) fail(ErrorCode::kBudgetExceeded, "too many free coefficient bits to enumerate");
    const std::uint64_t subsets = std::uint64_t{1} << free.size();

    std::vector<Partial> next;
    for (const Partial& part : frontier) {
      bool consistent = true;
      const bool target = m > 0 && part.residual[0].bit(k);
      for (std::size_t j = 1; j < m; ++j) consistent = consistent && part.residual[j].bit(k) == target;
      if (!consistent) continue;
      for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        if (m > 0 && (std::popcount(mask) % 2 == 1) != target) continue;
        Partial child = part;
        for (std::size_t f = 0; f < free.size(); ++f) {
          if (((mask >> f) & 1U) == 0) continue;
          child.coeffs[free[f]].set_bit(k);
          for (std::size_t j = 0; j < m; ++j) child.residual[j] += powers[j][free[f]].shifted_left(k);
        }
        next.push_back(std::move(child));
        if (next.size() > search_limit) {
          fail(ErrorCode::kBudgetExceeded, "solution search exceeded " + std::to_string(search_limit) +
                                               " partial solutions at bit " + std::to_string(k));
        }
      }
    }
    frontier = std::move(next);
  }

  std::vector<ReducedPoly> out;
  out.reserve(frontier.size());
  for (auto& part : frontier) out.emplace_back(ctx, std::move(part.coeffs));
  std::sort(out.begin(), out.end());
  return out;
}

ReducedPoly invert_permutation(const IntPoly& p, const Context& ctx) {
  if (!induces_permutation_on_units(p)) {
    fail(ErrorCode::kNotAPermutation, "polynomial " + p.to_string() + " does not permute Q_n");
  }
  const ResiduePoly coeffs = to_residue_poly(p, ctx.n());
  const auto domain = node_values(consecutive_nodes(ctx));
  std::vector<Residue> images;
  images.reserve(domain.size());
  for (const auto& x : domain) images.push_back(horner(coeffs, x));

  // Differences p(a) - p(b) equal (a - b) times a unit, so the images behave
  // like the consecutive nodes under elimination.
  ReducedPoly inverse = reduce(newton_solve(images, domain, ctx), ctx);

  for (const auto& x : domain) {
    if (horner(coeffs, eval(inverse, x)) != x) {
      fail(ErrorCode::kInternal, "composition check failed at " + x.to_string());
    }
  }
  return inverse;
}

ReducedPoly multiplicative_inverse(const IntPoly& p, const Context& ctx) {
  if (!induces_function_on_units(p)) {
    fail(ErrorCode::kNotAUnitFunction, "polynomial " + p.to_string() + " does not map Q_n into Q_n");
  }
  const ResiduePoly coeffs = to_residue_poly(p, ctx.n());
  std::vector<UnitResidue> inverses;
  for (const auto& x : consecutive_nodes(ctx)) {
    inverses.push_back(unit_inverse(UnitResidue(horner(coeffs, x.value()))));
  }
  return interpolate(ValueTable(ctx, std::move(inverses)), ctx);
}

ReducedPoly multiply_reduced(const ReducedPoly& a, const ReducedPoly& b, const Context& ctx) {
  if (a.n() != ctx.n() || b.n() != ctx.n()) fail(ErrorCode::kInvalidArgument, "operands have different moduli");
  ResiduePoly product(a.coeffs().size() + b.coeffs().size() - 1, ctx.zero());
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeff(i).is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) product[i + j] += a.coeff(i) * b.coeff(j);
  }
  return reduce(std::move(product), ctx);
}

}  // namespace unitpoly
