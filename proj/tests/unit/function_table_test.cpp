#include "cdiff/function_table.hpp"

#include <filesystem>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

#include "cdiff/error.hpp"
#include "cdiff/function_spec.hpp"
#include "oracle.hpp"

namespace cdiff {
namespace {

TEST(FunctionTable, MonomialMatchesRepeatedProducts) {
  const Field f = Field::build(3, 3);
  const oracle::Gf g(3, 3, f.modulus());
  for (std::uint64_t d : {1U, 2U, 5U, 13U, 26U, 40U}) {
    const auto t = FunctionTable::from_monomial(f, d);
    for (Element x = 0; x < f.q(); ++x) EXPECT_EQ(t(x), x == 0 ? 0U : g.pow(x, d)) << "d=" << d;
  }
}

TEST(FunctionTable, PolynomialWithLargeExponents) {
  const Field f = Field::build(3, 1);
  const oracle::Gf g(3, 1, f.modulus());
  // x^10 - x^6 - x^2 over GF(3)
  const auto t = parse_function(f, "poly:10=1,6=-1,2=-1");
  for (Element x = 0; x < 3; ++x) {
    const Element expect = g.sub(g.sub(g.pow(x, 10), g.pow(x, 6)), g.pow(x, 2));
    EXPECT_EQ(t(x), expect);
  }
  EXPECT_EQ(t.origin().kind, Origin::Kind::kPolynomial);
  EXPECT_EQ(t.origin().coefficients.count(10), 1U);
}

TEST(FunctionTable, ConstantTermUsesZeroToTheZeroIsOne) {
  const Field f = Field::build(5, 1);
  const auto t = FunctionTable::from_polynomial(f, {{0, 3}, {1, 1}});
  EXPECT_EQ(t(0), 3U);
  EXPECT_EQ(t(4), 2U);
}

TEST(FunctionTable, InverseAndPermutation) {
  const Field f = Field::build(2, 5);
  const auto inv = FunctionTable::inverse(f);
  EXPECT_EQ(inv(0), 0U);
  for (Element x = 1; x < f.q(); ++x) EXPECT_EQ(f.mul(x, inv(x)), 1U);
  EXPECT_TRUE(inv.is_permutation());
  EXPECT_FALSE(FunctionTable::from_monomial(Field::build(3, 2), 2).is_permutation());
}

TEST(FunctionTable, Families) {
  const Field f2 = Field::build(2, 6);
  EXPECT_EQ(gold(f2, 2), FunctionTable::from_monomial(f2, 5));
  EXPECT_EQ(kasami(f2, 2), FunctionTable::from_monomial(f2, 13));
  const Field f3 = Field::build(3, 3);
  EXPECT_EQ(coulter_matthews(f3, 3), FunctionTable::from_monomial(f3, 14));
  const Element minus_one = f3.neg(1);
  EXPECT_EQ(ternary_family(f3, minus_one), parse_function(f3, "poly:10=1,6=1,2=-1"));
}

TEST(FunctionTable, RejectsBadInput) {
  const Field f = Field::build(2, 3);
  try {
    FunctionTable::from_monomial(f, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidExponent);
  }
  try {
    FunctionTable::from_polynomial(f, {{3, 0}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyPolynomial);
  }
  try {
    FunctionTable::from_values(f, {1, 2, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSchemaViolation);
  }
  try {
    FunctionTable::from_values(f, {0, 1, 2, 3, 4, 5, 6, 8});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kRankOutOfRange);
  }
  EXPECT_THROW(parse_function(f, "cubic:3"), Error);
}

TEST(FunctionTable, SaveLoadRoundTrip) {
  const Field f = Field::build(3, 2);
  const auto t = FunctionTable::from_monomial(f, 5);
  std::stringstream ss;
  save_function(t, ss);
  const auto back = load_function(ss);
  EXPECT_EQ(back, t);
  EXPECT_EQ(back.origin(), t.origin());

  const auto path = std::filesystem::temp_directory_path() / "cdiff_function_table_test.json";
  save_function(t, path);
  EXPECT_EQ(parse_function(f, "table:" + path.string()), t);
  const Field other = Field::build(3, 2, std::vector<std::uint32_t>{1, 0, 1});
  try {
    load_function(path, other);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kFieldMismatch);
  }
  std::filesystem::remove(path);
}

}  // namespace
}  // namespace cdiff
