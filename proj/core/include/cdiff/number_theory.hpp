#pragma once

#include <cstdint>
#include <vector>

#include "cdiff/field.hpp"

namespace cdiff {

// gcd(p^k + 1, p^n - 1) from the closed form, cross-checked against the
// integer gcd (kFormulaMismatch on disagreement).
std::uint64_t gcd_power_formula(std::uint32_t p, std::uint32_t k, std::uint32_t n);
std::uint64_t gcd_power_direct(std::uint32_t p, std::uint32_t k, std::uint32_t n);

// Roots of z^(p^k) - a z - b over the field.
struct TrinomialOutcome {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t k = 0;  // after reduction mod n
  Element a = 0;
  Element b = 0;
  std::uint32_t g = 0;  // gcd(n, k)
  std::uint32_t m = 0;  // n / g
  Element alpha = 0;    // alpha_{m-1}
  Element beta = 0;     // beta_{m-1}
  std::uint64_t count = 0;
  std::vector<Element> roots;  // ascending
};

// k is reduced mod n; k = 0 mod n throws kSubfieldEdgeCase. For a = 0 the map
// is a bijection and the single root b^(p^-k) is returned.
TrinomialOutcome trinomial_roots(const Field& field, std::uint32_t k, Element a, Element b);

// Roots of x^2 + A x + B, ascending, each verified by substitution.
std::vector<Element> solve_quadratic(const Field& field, Element A, Element B);

// T_l with T_0 = 2, T_1 = x, T_{l+1} = x T_l - T_{l-1}, so that
// T_l(z + 1/z) = z^l + z^-l.
Element chebyshev_eval(const Field& field, std::uint64_t l, Element y);
// gcd(l, p^(2n) - 1) = 1.
bool chebyshev_is_permutation(std::uint32_t p, std::uint32_t n, std::uint64_t l);

}  // namespace cdiff
