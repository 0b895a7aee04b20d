#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "unitpoly/error.hpp"
#include "unitpoly/oracle.hpp"
#include "unitpoly/solve.hpp"

namespace unitpoly {
namespace {

using testing::poly;
using testing::units;

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an Error";
  return ErrorCode::kInternal;
}

std::vector<std::string> strings(const std::vector<ReducedPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.to_string());
  return out;
}

ValueTable table_of(const ReducedPoly& p, const Context& ctx) {
  std::vector<UnitResidue> values;
  for (const auto& x : consecutive_nodes(ctx)) values.emplace_back(eval(p, x.value()));
  return ValueTable(ctx, std::move(values));
}

TEST(Interpolate, WorkedExample) {
  const Context ctx(4);
  const ValueTable table(ctx, units(ctx, {9, 5, 9}));
  EXPECT_EQ(interpolate(table, ctx).to_string(), "6,2,1");
  EXPECT_EQ(interpolate_dense(table, ctx).to_string(), "6,2,1");
}

TEST(Interpolate, RowReductionMatchesHandComputation) {
  const Context ctx(4);
  const auto nodes = consecutive_nodes(ctx);
  const std::vector<Residue> rhs{ctx.residue(9), ctx.residue(5), ctx.residue(9)};
  const TriangularSystem sys = row_reduce_vandermonde(nodes, rhs, ctx);
  std::vector<std::vector<std::uint64_t>> rows;
  for (const auto& row : sys.rows) {
    std::vector<std::uint64_t> r;
    for (const auto& c : row) r.push_back(c.low_u64());
    rows.push_back(r);
  }
  EXPECT_EQ(rows, (std::vector<std::vector<std::uint64_t>>{{1, 1, 1}, {0, 2, 8}, {0, 0, 8}}));
  EXPECT_EQ(sys.rhs[0].low_u64(), 9U);
  EXPECT_EQ(sys.rhs[1].low_u64(), 12U);
  EXPECT_EQ(sys.rhs[2].low_u64(), 8U);
  std::vector<std::uint64_t> solution;
  for (const auto& c : back_substitute(sys)) solution.push_back(c.low_u64());
  EXPECT_EQ(solution, (std::vector<std::uint64_t>{6, 2, 1}));
}

TEST(Interpolate, InconsistentTable) {
  const Context ctx(4);
  const ValueTable table(ctx, units(ctx, {1, 1, 3}));
  EXPECT_EQ(code_of([&] { interpolate(table, ctx); }), ErrorCode::kInconsistentTable);
  EXPECT_EQ(code_of([&] { interpolate_dense(table, ctx); }), ErrorCode::kInconsistentTable);
}

TEST(Interpolate, WrongTableLength) {
  const Context ctx(4);
  EXPECT_THROW(ValueTable(ctx, units(ctx, {1, 3})), Error);
}

TEST(Interpolate, RecoversRandomReducedPolynomials) {
  std::mt19937_64 rng(31);
  for (unsigned n : {2U, 3U, 4U, 5U, 8U, 13U, 32U, 64U, 100U}) {
    const Context ctx(n);
    for (int trial = 0; trial < 40; ++trial) {
      const ReducedPoly p = testing::random_permutational(ctx, rng);
      const ValueTable table = table_of(p, ctx);
      ASSERT_EQ(interpolate(table, ctx), p) << "n=" << n;
      ASSERT_EQ(interpolate_dense(table, ctx), p) << "n=" << n;
    }
  }
}

TEST(Interpolate, RoutesAgreeOnArbitraryTables) {
  std::mt19937_64 rng(37);
  for (unsigned n = 2; n <= 9; ++n) {
    const Context ctx(n);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<UnitResidue> values;
      for (unsigned i = 0; i <= ctx.max_degree(); ++i) values.push_back(testing::random_unit(n, rng));
      const ValueTable table(ctx, values);
      std::optional<ReducedPoly> fast;
      std::optional<ReducedPoly> dense;
      try {
        fast = interpolate(table, ctx);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kInconsistentTable);
      }
      try {
        dense = interpolate_dense(table, ctx);
      } catch (const Error& e) {
        ASSERT_EQ(e.code(), ErrorCode::kInconsistentTable);
      }
      ASSERT_EQ(fast, dense) << "n=" << n;
    }
  }
}

TEST(InterpolateAtNodes, WorkedExample) {
  const Context ctx(4);
  const auto solutions = interpolate_at_nodes(units(ctx, {1, 5, 9}), units(ctx, {9, 9, 9}), ctx);
  EXPECT_EQ(strings(solutions), (std::vector<std::string>{"2,6,1", "5,4", "6,2,1", "9"}));
}

TEST(InterpolateAtNodes, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(41);
  for (unsigned n = 2; n <= 5; ++n) {
    const Context ctx(n);
    const std::uint64_t m = std::uint64_t{1} << n;
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t count = 1 + rng() % (m / 2);
      std::set<std::uint64_t> picked;
      while (picked.size() < count) picked.insert((rng() % m) | 1U);
      std::vector<UnitResidue> nodes;
      std::vector<UnitResidue> values;
      for (auto x : picked) {
        nodes.emplace_back(ctx.residue(x));
        values.emplace_back(ctx.residue((rng() % m) | 1U));
      }
      std::vector<std::string> expected;
      oracle::ReducedStream stream(n);
      std::vector<std::uint64_t> coeffs;
      while (stream.next(coeffs)) {
        const auto table = oracle::function_of(coeffs, n, oracle::Domain::kUnits);
        bool match = true;
        for (std::size_t k = 0; k < nodes.size() && match; ++k) {
          match = table.values[nodes[k].value().low_u64() / 2] == values[k].value().low_u64();
        }
        if (match) expected.push_back(reduce(testing::poly(coeffs), ctx).to_string());
      }
      ASSERT_EQ(strings(interpolate_at_nodes(nodes, values, ctx)), expected) << "n=" << n;
    }
  }
}

TEST(InterpolateAtNodes, RejectsBadInput) {
  const Context ctx(4);
  EXPECT_THROW(interpolate_at_nodes(units(ctx, {1, 1}), units(ctx, {3, 3}), ctx), Error);
  EXPECT_THROW(interpolate_at_nodes(units(ctx, {1, 3}), units(ctx, {3}), ctx), Error);
  // No nodes at all: every reduced polynomial qualifies, which blows the budget.
  EXPECT_EQ(code_of([&] { interpolate_at_nodes({}, {}, Context(12), 1000); }), ErrorCode::kBudgetExceeded);
}

TEST(InvertPermutation, KnownValues) {
  EXPECT_EQ(invert_permutation(poly({5, 1, 1}), Context(4)).to_string(), "13,5,1");
  EXPECT_EQ(invert_permutation(poly({2, 3}), Context(4)).to_string(), "2,3");
  for (unsigned n : {2U, 7U, 64U}) EXPECT_EQ(invert_permutation(poly({0, 1}), Context(n)).to_string(), "0,1");
  EXPECT_EQ(code_of([] { invert_permutation(poly({4, 4, 1}), Context(4)); }), ErrorCode::kNotAPermutation);
}

TEST(InvertPermutation, ComposesToIdentity) {
  std::mt19937_64 rng(43);
  for (unsigned n : {2U, 3U, 5U, 9U, 33U, 64U, 128U}) {
    const Context ctx(n);
    for (int trial = 0; trial < 10; ++trial) {
      const ReducedPoly p = testing::random_permutational(ctx, rng);
      const ReducedPoly r = invert_permutation(p.to_int_poly(), ctx);
      for (int k = 0; k < 20; ++k) {
        const UnitResidue x = testing::random_unit(n, rng);
        ASSERT_EQ(eval(p, eval(r, x.value())), x.value()) << "n=" << n;
        ASSERT_EQ(eval(r, eval(p, x.value())), x.value()) << "n=" << n;
      }
    }
  }
}

TEST(MultiplicativeInverse, KnownValues) {
  EXPECT_EQ(multiplicative_inverse(poly({2, 1}), Context(3)).to_string(), "2,1");
  EXPECT_EQ(multiplicative_inverse(poly({4, 3}), Context(4)).to_string(), "3,3,1");
  EXPECT_EQ(multiplicative_inverse(poly({31, 2, 2, 1, 1}), Context(5)).to_string(), "4,7,2");
  EXPECT_EQ(code_of([] { multiplicative_inverse(poly({1, 1}), Context(4)); }), ErrorCode::kNotAUnitFunction);
}

TEST(MultiplicativeInverse, ProductIsOne) {
  std::mt19937_64 rng(47);
  for (unsigned n : {2U, 4U, 6U, 17U, 64U, 128U}) {
    const Context ctx(n);
    ResiduePoly one_coeffs(ctx.max_degree() + 1, ctx.zero());
    one_coeffs[0] = ctx.one();
    const ReducedPoly one(ctx, one_coeffs);
    for (int trial = 0; trial < 15; ++trial) {
      ResiduePoly coeffs;
      for (unsigned i = 0; i <= ctx.max_degree(); ++i) coeffs.push_back(Residue::random(n, ctx.coeff_bits(i), rng));
      const ReducedPoly p(ctx, coeffs);
      if (!induces_function_on_units(p.to_int_poly())) continue;
      ASSERT_EQ(multiply_reduced(p, multiplicative_inverse(p.to_int_poly(), ctx), ctx), one) << "n=" << n;
    }
  }
}

TEST(MultiplyReduced, KnownValues) {
  for (unsigned n : {3U, 4U}) {
    const Context ctx(n);
    const ReducedPoly a = reduce(poly({2, 1}), ctx);
    EXPECT_EQ(multiply_reduced(a, a, ctx).to_string(), n == 3 ? "1" : "4,4,1");
  }
}

TEST(MultiplyReduced, MatchesPointwiseProduct) {
  std::mt19937_64 rng(53);
  for (unsigned n : {2U, 5U, 8U, 40U, 96U}) {
    const Context ctx(n);
    for (int trial = 0; trial < 20; ++trial) {
      const ReducedPoly a = reduce(testing::random_int_poly(ctx.max_degree(), n, rng), ctx);
      const ReducedPoly b = reduce(testing::random_int_poly(ctx.max_degree(), n, rng), ctx);
      const ReducedPoly c = multiply_reduced(a, b, ctx);
      ASSERT_EQ(c, reduce(a.to_int_poly() * b.to_int_poly(), ctx));
      for (int k = 0; k < 10; ++k) {
        const UnitResidue x = testing::random_unit(n, rng);
        ASSERT_EQ(eval(c, x.value()), eval(a, x.value()) * eval(b, x.value()));
      }
    }
  }
}

}  // namespace
}  // namespace unitpoly
