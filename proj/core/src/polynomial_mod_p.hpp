#pragma once

#include <cstdint>
#include <span>
#include <vector>

// Dense univariate polynomials over F_p, constant term first. Internal helper
// for modulus validation and for field multiplication without log tables.
namespace cdiff::detail {

using Poly = std::vector<std::uint32_t>;

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p);
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p);

void trim(Poly& a);
int degree(const Poly& a);

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p);
// Remainder of a modulo the monic polynomial f.
Poly poly_rem(Poly a, const Poly& f, std::uint32_t p);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p);
Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p);
Poly poly_gcd(Poly a, Poly b, std::uint32_t p);

bool is_prime(std::uint64_t v);
std::vector<std::uint64_t> prime_factors(std::uint64_t v);

// Rabin's test: f monic of degree n is irreducible iff x^{p^n} = x mod f and
// gcd(x^{p^{n/r}} - x, f) = 1 for every prime r dividing n.
bool is_irreducible(const Poly& f, std::uint32_t p);

// Whether x has multiplicative order p^n - 1 modulo the irreducible f.
bool is_primitive(const Poly& f, std::uint32_t p);

}  // namespace cdiff::detail
