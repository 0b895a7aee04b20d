#include <gtest/gtest.h>

#include <random>
#include <set>

#include "helpers.hpp"
#include "unitpoly/error.hpp"
#include "unitpoly/oracle.hpp"
#include "unitpoly/poly_core.hpp"

namespace unitpoly {
namespace {

using testing::poly;

ReducedPoly reduced(const Context& ctx, std::initializer_list<std::uint64_t> coeffs) {
  ResiduePoly out;
  for (auto c : coeffs) out.push_back(ctx.residue(c));
  out.resize(ctx.max_degree() + 1, ctx.zero());
  return ReducedPoly(ctx, out);
}

TEST(Eval, KnownValues) {
  EXPECT_EQ(eval(poly({1, 0, 0, 0, 0, 3}), Residue::from_u64(5, 3)).to_string(), "26");
  EXPECT_EQ(eval(poly({5, 1, 1}), Residue::from_u64(4, 3)).to_string(), "1");
  EXPECT_EQ(eval(poly({-1}), Residue::from_u64(4, 3)).to_string(), "15");
}

TEST(ReducedPoly, ValidatesShape) {
  const Context ctx(5);
  EXPECT_NO_THROW(reduced(ctx, {31, 15, 3, 1}));
  EXPECT_THROW(reduced(ctx, {0, 16}), Error);
  EXPECT_THROW(reduced(ctx, {0, 0, 4}), Error);
  EXPECT_THROW(ReducedPoly(ctx, ResiduePoly{ctx.one()}), Error);
  EXPECT_EQ(reduced(ctx, {31, 3, 2}).to_string(), "31,3,2");
  EXPECT_EQ(reduced(ctx, {}).to_string(), "0");
  EXPECT_EQ(reduced(ctx, {31, 3, 2}).degree(), 2U);
}

TEST(Reduce, KnownValues) {
  EXPECT_EQ(reduce(poly({0, 0, 0, 1}), Context(4)).to_string(), "15,1,1");
  EXPECT_EQ(reduce(poly({1, 0, 0, 0, 0, 3}), Context(5)).to_string(), "31,3,2");
  EXPECT_EQ(reduce(poly({0, 1}), Context(9)).to_string(), "0,1");
  EXPECT_EQ(reduce(poly({-3}), Context(4)).to_string(), "13");
}

TEST(Generators, KnownValuesAtFive) {
  const IdealGenerators gens = ideal_generators(Context(5));
  ASSERT_EQ(gens.polys.size(), 5U);
  EXPECT_EQ(gens.polys[0].to_string(), "32");
  EXPECT_EQ(gens.polys[1].to_string(), "16,16");
  EXPECT_EQ(gens.polys[2].to_string(), "12,16,4");
  EXPECT_EQ(gens.polys[3].to_string(), "30,14,18,2");
  EXPECT_EQ(gens.polys[4].to_string(), "9,16,22,16,1");
}

TEST(Generators, VanishOnUnits) {
  for (unsigned n = 2; n <= 10; ++n) {
    const Context ctx(n);
    for (const auto& g : ideal_generators(ctx).polys) {
      const auto table = oracle::function_of(g, n, oracle::Domain::kUnits);
      for (auto v : table.values) ASSERT_EQ(v, 0U) << "n=" << n << " g=" << g.to_string();
    }
  }
}

TEST(Reduce, IdempotentAndEquivalent) {
  std::mt19937_64 rng(8);
  for (unsigned n = 2; n <= 8; ++n) {
    const Context ctx(n);
    for (int trial = 0; trial < 200; ++trial) {
      const IntPoly p = testing::random_int_poly(9, n + 3, rng);
      const ReducedPoly r = reduce(p, ctx);
      ASSERT_EQ(reduce(r.to_int_poly(), ctx), r);
      ASSERT_EQ(oracle::function_of(p, n, oracle::Domain::kUnits),
                oracle::function_of(r.to_int_poly(), n, oracle::Domain::kUnits))
          << p.to_string() << " n=" << n;
      ASSERT_TRUE(equivalent(p, r.to_int_poly(), ctx));
    }
  }
}

TEST(Reduce, LargeModulusMatchesEvaluation) {
  std::mt19937_64 rng(9);
  for (unsigned n : {64U, 100U, 256U}) {
    const Context ctx(n);
    for (int trial = 0; trial < 10; ++trial) {
      const IntPoly p = testing::random_int_poly(3 * ctx.max_degree(), n, rng);
      const ReducedPoly r = reduce(p, ctx);
      for (int k = 0; k < 10; ++k) {
        const UnitResidue a = testing::random_unit(n, rng);
        ASSERT_EQ(eval(p, a.value()), eval(r, a.value()));
      }
    }
  }
}

TEST(Equivalent, DistinguishesFunctions) {
  const Context ctx(4);
  EXPECT_TRUE(equivalent(poly({0, 0, 0, 1}), poly({15, 1, 1}), ctx));
  EXPECT_FALSE(equivalent(poly({0, 0, 0, 1}), poly({15, 1}), ctx));
}

TEST(Predicates, KnownValues) {
  EXPECT_TRUE(induces_function_on_units(poly({5, 1, 1})));
  EXPECT_TRUE(induces_function_on_units(poly({0, 1})));
  EXPECT_FALSE(induces_function_on_units(poly({1, 1})));
  EXPECT_TRUE(induces_permutation_on_units(poly({2, 1})));
  EXPECT_FALSE(induces_permutation_on_units(poly({4, 4, 1})));
  EXPECT_TRUE(induces_permutation_on_units(poly({0, 1})));
  EXPECT_TRUE(rivest_permutes_ring(poly({0, 1})));
  EXPECT_FALSE(rivest_permutes_ring(poly({0, 0, 1})));
  EXPECT_TRUE(rivest_permutes_ring(poly({1, 1, 2})));
  EXPECT_THROW(rivest_permutes_ring(poly({7})), Error);
  EXPECT_THROW(rivest_permutes_ring(IntPoly()), Error);
}

TEST(Predicates, AgreeWithOracleOnRandomPolynomials) {
  std::mt19937_64 rng(13);
  for (unsigned n = 2; n <= 7; ++n) {
    for (int trial = 0; trial < 300; ++trial) {
      const IntPoly p = testing::random_int_poly(5, n, rng);
      const auto on_units = oracle::function_of(p, n, oracle::Domain::kUnits);
      bool all_odd = true;
      for (auto v : on_units.values) all_odd = all_odd && (v % 2 == 1);
      ASSERT_EQ(induces_function_on_units(p), all_odd) << p.to_string();
      ASSERT_EQ(induces_permutation_on_units(p), oracle::is_permutation(on_units)) << p.to_string();
      if (p.degree().value_or(0) >= 1 && n <= 6) {
        ASSERT_EQ(rivest_permutes_ring(p), oracle::is_permutation(oracle::function_of(p, n, oracle::Domain::kRing)))
            << p.to_string() << " n=" << n;
      }
    }
  }
}

bool brute_quasigroup(const BivariatePoly& p, unsigned n) {
  const std::uint64_t m = std::uint64_t{1} << n;
  std::vector<std::uint64_t> table(m * m);
  for (std::uint64_t x = 0; x < m; ++x) {
    for (std::uint64_t y = 0; y < m; ++y) {
      mpz_class v = 0;
      for (std::size_t i = 0; i < p.x_extent(); ++i) {
        for (std::size_t j = 0; j < p.y_extent(); ++j) {
          mpz_class term = p.coeff(i, j);
          for (std::size_t e = 0; e < i; ++e) term *= static_cast<unsigned long>(x);
          for (std::size_t e = 0; e < j; ++e) term *= static_cast<unsigned long>(y);
          v += term;
        }
      }
      mpz_class r;
      mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), n);
      table[x * m + y] = r.get_ui();
    }
  }
  for (std::uint64_t a = 0; a < m; ++a) {
    std::set<std::uint64_t> row;
    std::set<std::uint64_t> col;
    for (std::uint64_t b = 0; b < m; ++b) {
      row.insert(table[a * m + b]);
      col.insert(table[b * m + a]);
    }
    if (row.size() != m || col.size() != m) return false;
  }
  return true;
}

TEST(Bivariate, KnownValues) {
  EXPECT_TRUE(bivariate_quasigroup_check(BivariatePoly::parse("0,1;1"), 4));   // x + y
  EXPECT_FALSE(bivariate_quasigroup_check(BivariatePoly::parse("0;0,1"), 4));  // xy
  const BivariatePoly mixed = BivariatePoly::parse("0,1;1,2");                 // x + y + 2xy
  EXPECT_TRUE(bivariate_quasigroup_check(mixed, 4));
  EXPECT_TRUE(brute_quasigroup(mixed, 4));
}

TEST(Conjugate, ShiftsArgumentAndValue) {
  EXPECT_EQ(conjugate_to_nonunits(poly({2, 3})).to_string(), "4,3");  // 2 + 3(x+1) - 1
  EXPECT_EQ(conjugate_to_nonunits(poly({0, 0, 1})).to_string(), "0,2,1");
}

TEST(Glue, KnownValue) {
  const Context ctx(4);
  const IntPoly g = glue_polynomial(poly({0, 1}), poly({2, 3}), ctx);
  EXPECT_EQ(eval(g, ctx.zero()).to_string(), "4");
  EXPECT_THROW(glue_polynomial(poly({1, 1}), poly({0, 1}), ctx), Error);
}

TEST(Glue, PermutesRingAndMatchesPieces) {
  std::mt19937_64 rng(17);
  for (unsigned n = 2; n <= 6; ++n) {
    const Context ctx(n);
    for (int trial = 0; trial < 25; ++trial) {
      const IntPoly p = testing::random_permutational(ctx, rng).to_int_poly();
      const IntPoly h = testing::random_permutational(ctx, rng).to_int_poly();
      const IntPoly g = glue_polynomial(p, h, ctx);
      const auto ring = oracle::function_of(g, n, oracle::Domain::kRing);
      ASSERT_TRUE(oracle::is_permutation(ring)) << "n=" << n;
      const auto p_table = oracle::function_of(p, n, oracle::Domain::kRing);
      const auto h_table = oracle::function_of(h, n, oracle::Domain::kRing);
      const std::uint64_t m = std::uint64_t{1} << n;
      for (std::uint64_t x = 0; x < m; ++x) {
        const std::uint64_t want = (x % 2 == 1) ? p_table.values[x] : (h_table.values[x + 1] + m - 1) % m;
        ASSERT_EQ(ring.values[x], want) << "n=" << n << " x=" << x;
      }
    }
  }
}

TEST(Indicators, SplitUnitsFromNonUnits) {
  for (unsigned n = 2; n <= 8; ++n) {
    const Context ctx(n);
    const auto [v0, v1] = indicator_polys(ctx);
    const auto t0 = oracle::function_of(v0, n, oracle::Domain::kRing);
    const auto t1 = oracle::function_of(v1, n, oracle::Domain::kRing);
    for (std::uint64_t x = 0; x < t0.values.size(); ++x) {
      ASSERT_EQ(t0.values[x], x % 2 == 1 ? 1U : 0U) << "n=" << n << " x=" << x;
      ASSERT_EQ(t1.values[x], x % 2 == 1 ? 0U : 1U) << "n=" << n << " x=" << x;
    }
  }
}

}  // namespace
}  // namespace unitpoly
