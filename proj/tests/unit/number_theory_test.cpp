#include "cdiff/number_theory.hpp"

#include <numeric>

#include "gtest/gtest.h"

#include "cdiff/error.hpp"
#include "oracle.hpp"

namespace cdiff {
namespace {

TEST(GcdPower, FormulaMatchesIntegerGcd) {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    for (std::uint32_t k = 1; k <= 12; ++k) {
      for (std::uint32_t n = 1; n <= 12; ++n) {
        const std::uint64_t direct = std::gcd(oracle::ipow(p, k) + 1, oracle::ipow(p, n) - 1);
        EXPECT_EQ(gcd_power_direct(p, k, n), direct);
        EXPECT_EQ(gcd_power_formula(p, k, n), direct) << p << " " << k << " " << n;
      }
    }
  }
}

TEST(Trinomial, RootsMatchExhaustiveSearch) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 4}, {2, 6}, {3, 3}, {3, 4}, {5, 2}}) {
    const Field f = Field::build(p, n);
    const oracle::Tables t(oracle::Gf(p, n, f.modulus()));
    for (std::uint32_t k = 1; k < n; ++k) {
      const std::uint64_t pk = oracle::ipow(p, k);
      const std::uint64_t sub = oracle::ipow(p, std::gcd(n, k));
      for (Element a = 0; a < f.q(); ++a) {
        for (Element b = 0; b < f.q(); b += (f.q() > 30 ? 3 : 1)) {
          std::vector<Element> expect;
          for (Element z = 0; z < f.q(); ++z) {
            if (t.sub(t.sub(t.pow(z, pk), t.mul[a * f.q() + z]), b) == 0) expect.push_back(z);
          }
          const auto out = trinomial_roots(f, k, a, b);
          ASSERT_EQ(out.roots, expect) << p << "^" << n << " k=" << k << " a=" << a << " b=" << b;
          EXPECT_EQ(out.count, expect.size());
          EXPECT_TRUE(out.count == 0 || out.count == 1 || out.count == sub);
          EXPECT_EQ(out.g, std::gcd(n, k));
        }
      }
    }
  }
}

TEST(Trinomial, EdgeCases) {
  const Field f = Field::build(2, 4);
  try {
    trinomial_roots(f, 4, 3, 5);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSubfieldEdgeCase);
  }
  const auto out = trinomial_roots(f, 5, 0, 7);
  EXPECT_EQ(out.k, 1U);
  ASSERT_EQ(out.count, 1U);
  EXPECT_EQ(f.frobenius(out.roots[0], 1), 7U);
}

TEST(Quadratic, RootsMatchExhaustiveSearch) {
  for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{2, 3}, {2, 4}, {3, 2}, {5, 1}, {7, 2}}) {
    const Field f = Field::build(p, n);
    for (Element A = 0; A < f.q(); ++A) {
      for (Element B = 0; B < f.q(); ++B) {
        std::vector<Element> expect;
        for (Element x = 0; x < f.q(); ++x) {
          if (f.add(f.add(f.mul(x, x), f.mul(A, x)), B) == 0) expect.push_back(x);
        }
        ASSERT_EQ(solve_quadratic(f, A, B), expect) << p << "^" << n << " A=" << A << " B=" << B;
      }
    }
  }
}

TEST(Chebyshev, LadderMatchesZPlusInverse) {
  // Over GF(p^(2n)), T_l(z + 1/z) = z^l + z^-l for every nonzero z.
  const Field big = Field::build(3, 4);
  for (std::uint64_t l : {0U, 1U, 2U, 5U, 14U, 41U}) {
    for (Element z = 1; z < big.q(); z += 3) {
      const Element y = big.add(z, big.inv(z));
      const Element expect = big.add(big.pow(z, static_cast<std::int64_t>(l)), big.pow(z, -static_cast<std::int64_t>(l)));
      ASSERT_EQ(chebyshev_eval(big, l, y), expect) << "l=" << l << " z=" << z;
    }
  }
}

TEST(Chebyshev, PermutationCriterion) {
  for (std::uint32_t n = 1; n <= 4; ++n) {
    for (std::uint64_t l = 1; l <= 20; ++l) {
      EXPECT_EQ(chebyshev_is_permutation(3, n, l), std::gcd(l, oracle::ipow(3, 2 * n) - 1) == 1);
    }
  }
}

}  // namespace
}  // namespace cdiff
