#include "cdiff/walsh.hpp"

#include <nlohmann/json.hpp>

#include "gtest/gtest.h"

#include "cdiff/error.hpp"
#include "cdiff/function_spec.hpp"
#include "oracle.hpp"

namespace cdiff {
namespace {

std::vector<std::uint32_t> values_of(const FunctionTable& f) { return {f.values().begin(), f.values().end()}; }

Integer oracle_integer(const oracle::Cyc& z) {
  bool ok = false;
  const Integer v = z.integer(ok);
  EXPECT_TRUE(ok);
  return v;
}

TEST(Walsh, TableMatchesCharacterSum) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {3, 2}, {5, 1}, {3, 3}}) {
    const Field f = Field::build(p, n);
    const oracle::Tables t(oracle::Gf(p, n, f.modulus()));
    const auto F = FunctionTable::from_monomial(f, p == 2 ? 3 : 2);
    const auto w = WalshTable::compute(F);
    const auto expect = oracle::walsh(t, values_of(F));
    for (Element u = 0; u < f.q(); ++u) {
      for (Element v = 0; v < f.q(); ++v) {
        const auto& e = expect[u * f.q() + v];
        std::vector<Integer> coeffs(e.c.begin(), e.c.end());
        ASSERT_EQ(w.at(u, v), CyclotomicInt::from_coefficients(p, coeffs));
        EXPECT_EQ(walsh(F, u, v), w.at(u, v));
      }
    }
  }
}

TEST(Walsh, ParsevalPerV) {
  const Field f = Field::build(3, 3);
  const auto w = WalshTable::compute(FunctionTable::inverse(f));
  for (Element v = 0; v < f.q(); ++v) {
    CyclotomicInt total(3);
    for (Element u = 0; u < f.q(); ++u) total += w.at(u, v).norm_sq();
    EXPECT_EQ(total.as_integer(), Integer{27} * 27);
  }
}

TEST(Walsh, PhiCoefficients) {
  EXPECT_EQ(phi_coefficients(1), (std::vector<Integer>{-1, 1}));
  EXPECT_EQ(phi_coefficients(2), (std::vector<Integer>{2, -3, 1}));
  EXPECT_EQ(phi_coefficients(3), (std::vector<Integer>{-6, 11, -6, 1}));
  EXPECT_EQ(phi_coefficients(4), oracle::phi(4));
}

TEST(Walsh, KnownPowerSums) {
  const Field f9 = Field::build(3, 2);
  const auto sq9 = FunctionTable::from_monomial(f9, 2);
  EXPECT_EQ(pcn_power_sum(sq9, 2), 12393);
  const auto stat = apcn_statistic(sq9, 2);
  EXPECT_EQ(stat.lhs, 1948617);
  EXPECT_TRUE(stat.equality());
  EXPECT_EQ(pcn_power_sum(FunctionTable::from_monomial(Field::build(3, 1), 2), 2), 135);
}

TEST(Walsh, PcnSumEqualsQToTheFourIffPerfect) {
  const Field f = Field::build(2, 3);
  const auto cube = FunctionTable::from_monomial(f, 3);
  for (Element c = 0; c < f.q(); ++c) {
    if (c == 1) continue;
    const bool pcn = uniformity(cube, c, AConvention::kPaperFootnote).value == 1;
    const Integer s = pcn_power_sum(cube, c);
    EXPECT_GE(s, Integer{4096});
    EXPECT_EQ(s == 4096, pcn) << c;
  }
}

TEST(Walsh, ApcnLhsFromLiteralConjugatesDiffers) {
  // With the conjugate on W(u_i, v_i) instead of W(u_i, c v_i) the left side
  // drops below 3 q^2 S - 2 q^6 even though x^2 is APcN over GF(9) at c = 2.
  const Field f = Field::build(3, 2);
  const oracle::Tables t(oracle::Gf(3, 2, f.modulus()));
  const auto F = FunctionTable::from_monomial(f, 2);
  const auto w = oracle::walsh(t, values_of(F));
  const Element q = 9, c = 2;
  oracle::Cyc total(3);
  for (Element u1 = 0; u1 < q; ++u1)
    for (Element u2 = 0; u2 < q; ++u2)
      for (Element v1 = 0; v1 < q; ++v1)
        for (Element v2 = 0; v2 < q; ++v2) {
          const Element su = t.add[u1 * q + u2], sv = t.add[v1 * q + v2];
          auto g_sum = w[su * q + sv] * w[su * q + t.mul[c * q + sv]].conj();
          auto term = g_sum.conj() * w[u1 * q + v1].conj() * w[u1 * q + t.mul[c * q + v1]] * w[u2 * q + v2].conj() *
                      w[u2 * q + t.mul[c * q + v2]];
          total += term;
        }
  EXPECT_EQ(oracle_integer(total), 951345);
  EXPECT_EQ(apcn_statistic(F, c).rhs, 1948617);
}

TEST(Walsh, ConvolutionSidesAgreeWithNaiveExpansion) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 2}, {3, 1}, {2, 3}, {3, 2}}) {
    const Field f = Field::build(p, n);
    const oracle::Tables t(oracle::Gf(p, n, f.modulus()));
    const auto F = FunctionTable::from_monomial(f, p == 2 ? 3 : 2);
    const auto w = oracle::walsh(t, values_of(F));
    for (Element c = 0; c < f.q(); ++c) {
      if (c == 1) continue;
      for (std::uint32_t delta = 1; delta <= (f.q() <= 4 ? 3U : 2U); ++delta) {
        const auto stat = convolution_statistic(F, c, delta, WalshSide::kRequire);
        ASSERT_TRUE(stat.walsh_side.has_value());
        EXPECT_EQ(*stat.walsh_side, stat.count_side);
        // Rebuild the Walsh side from the naive j-fold sums.
        const auto A = oracle::phi(delta);
        const Integer q = f.q();
        Integer qq = q * q;
        Integer expect = qq * A[0];
        Integer scale = 1;
        for (std::uint32_t j = 1; j <= delta; ++j) {
          scale *= qq;
          expect += A[j] * oracle::naive_convolution(t, w, c, j) / scale;
        }
        EXPECT_EQ(stat.count_side, expect) << "p=" << p << " n=" << n << " c=" << c << " delta=" << delta;
        const auto u = uniformity(F, c, AConvention::kPaperFootnote).value;
        EXPECT_EQ(stat.count_side == 0, u <= delta);
      }
    }
  }
}

TEST(Walsh, KnownConvolutionValues) {
  const Field f = Field::build(2, 3);
  const auto cube = FunctionTable::from_monomial(f, 3);
  const Integer expect[] = {56, 42, 0};
  for (std::uint32_t delta = 1; delta <= 3; ++delta) {
    const auto stat = convolution_statistic(cube, 2, delta, WalshSide::kRequire);
    EXPECT_EQ(stat.count_side, expect[delta - 1]);
    EXPECT_EQ(stat.walsh_side, expect[delta - 1]);
  }
  EXPECT_EQ(derivative_walsh_statistic(cube, 2, 1, 1), 8);
}

TEST(Walsh, DerivativeProfileZeroIffBoundHolds) {
  const Field f = Field::build(3, 2);
  const auto F = FunctionTable::from_monomial(f, 2);
  const auto profile = derivative_walsh_profile(F, 2, 2);
  EXPECT_TRUE(profile.all_zero);
  const auto tight = derivative_walsh_profile(F, 2, 1);
  EXPECT_FALSE(tight.all_zero);
  for (Element a = 0; a < f.q(); ++a) EXPECT_GE(tight.per_a[a], 0);
}

TEST(Walsh, Guards) {
  const Field f = Field::build(2, 3);
  const auto cube = FunctionTable::from_monomial(f, 3);
  try {
    pcn_power_sum(cube, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
  try {
    convolution_statistic(cube, 2, 3, WalshSide::kRequire, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeGuardExceeded);
  }
  EXPECT_FALSE(convolution_statistic(cube, 2, 3, WalshSide::kIfAffordable, 10).walsh_side.has_value());
  EXPECT_FALSE(convolution_statistic(cube, 2, 3, WalshSide::kSkip).walsh_side.has_value());
  EXPECT_THROW(apcn_statistic(FunctionTable::from_monomial(Field::build(3, 4), 2), 2), Error);
  EXPECT_THROW(WalshTable::compute(FunctionTable::from_monomial(Field::build(2, 11), 3)), Error);
}

TEST(Walsh, Json) {
  const auto w = WalshTable::compute(FunctionTable::from_monomial(Field::build(3, 1), 2));
  const auto j = walsh_to_json(w);
  EXPECT_EQ(j.at("p"), 3);
  EXPECT_EQ(j.at("entries").size(), 9U);
}

}  // namespace
}  // namespace cdiff
