#include <gtest/gtest.h>

#include "unitpoly/context.hpp"
#include "unitpoly/error.hpp"
#include "unitpoly/oracle.hpp"

namespace unitpoly {
namespace {

TEST(Context, FactorialValuation) {
  EXPECT_EQ(two_adic_valuation_factorial(0), 0U);
  EXPECT_EQ(two_adic_valuation_factorial(1), 0U);
  EXPECT_EQ(two_adic_valuation_factorial(4), 3U);
  EXPECT_EQ(two_adic_valuation_factorial(10), 8U);
  for (std::uint64_t i = 0; i < 300; ++i) {
    EXPECT_EQ(two_adic_valuation_factorial(i), oracle::factorial_two_valuation(i)) << i;
  }
}

TEST(Context, MaxReducedDegree) {
  EXPECT_EQ(max_reduced_degree(1), 0U);
  EXPECT_EQ(max_reduced_degree(2), 1U);
  EXPECT_EQ(max_reduced_degree(4), 2U);
  EXPECT_EQ(max_reduced_degree(5), 3U);
  for (unsigned n = 1; n <= 200; ++n) {
    const unsigned d = max_reduced_degree(n);
    EXPECT_GT(n, d + two_adic_valuation_factorial(d));
    EXPECT_LE(n, d + 1 + two_adic_valuation_factorial(d + 1));
  }
}

TEST(Context, Tables) {
  const Context ctx(5);
  EXPECT_EQ(ctx.max_degree(), 3U);
  EXPECT_EQ(ctx.coeff_bits(0), 5U);
  EXPECT_EQ(ctx.coeff_bits(1), 4U);
  EXPECT_EQ(ctx.coeff_bits(2), 2U);
  EXPECT_EQ(ctx.coeff_bits(3), 1U);
  EXPECT_EQ(ctx.t(4), 3U);
}

TEST(Context, RejectsOutOfRange) {
  EXPECT_THROW(Context(1), Error);
  EXPECT_THROW(Context(0), Error);
  EXPECT_THROW(Context(20, 16), Error);
  EXPECT_NO_THROW(Context(16, 16));
}

}  // namespace
}  // namespace unitpoly
