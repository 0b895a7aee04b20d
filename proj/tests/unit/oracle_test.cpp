#include <gtest/gtest.h>

#include "helpers.hpp"
#include "unitpoly/error.hpp"
#include "unitpoly/oracle.hpp"

namespace unitpoly::oracle {
namespace {

TEST(Oracle, FunctionTables) {
  const auto units = function_of(testing::poly({5, 1, 1}), 4, Domain::kUnits);
  EXPECT_EQ(units.values, (std::vector<std::uint64_t>{7, 1, 3, 13, 15, 9, 11, 5}));
  const auto ring = function_of(testing::poly({-1, 0, 1}), 3, Domain::kRing);
  EXPECT_EQ(ring.values, (std::vector<std::uint64_t>{7, 0, 3, 0, 7, 0, 3, 0}));
  EXPECT_TRUE(is_permutation(units));
  EXPECT_FALSE(is_permutation(ring));
  EXPECT_THROW(function_of(testing::poly({1}), kMaxN + 1, Domain::kUnits), Error);
}

TEST(Oracle, ReducedStreamCoversBounds) {
  ReducedStream stream(5);
  EXPECT_EQ(stream.bounds(), (std::vector<std::uint64_t>{32, 16, 4, 2}));
  EXPECT_EQ(stream.size(), 32U * 16U * 4U * 2U);
  std::vector<std::uint64_t> v;
  std::uint64_t seen = 0;
  while (stream.next(v)) ++seen;
  EXPECT_EQ(seen, stream.size());
  stream.restart();
  ASSERT_TRUE(stream.next(v));
  EXPECT_EQ(v, (std::vector<std::uint64_t>{0, 0, 0, 0}));
  EXPECT_THROW(ReducedStream(7), Error);
}

TEST(Oracle, RingCensusSmall) {
  const auto census = ring_function_census(2, true);
  EXPECT_EQ(census.functions, 64U);  // 4 * 4 * 2 * 2 falling-factorial coefficient choices
  EXPECT_EQ(census.distinct, 64U);
  EXPECT_EQ(census.permutations, 8U);
}

}  // namespace
}  // namespace unitpoly::oracle
