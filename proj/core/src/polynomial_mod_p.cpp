#include "polynomial_mod_p.hpp"

#include <algorithm>

namespace cdiff::detail {

std::uint32_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) {
  for (std::size_t i = a.size(); i > 0; --i) {
    if (a[i - 1] != 0) return static_cast<int>(i - 1);
  }
  return -1;
}

Poly poly_sub(const Poly& a, const Poly& b, std::uint32_t p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < r.size(); ++i) {
    const std::uint64_t x = i < a.size() ? a[i] : 0;
    const std::uint64_t y = i < b.size() ? b[i] : 0;
    r[i] = static_cast<std::uint32_t>((x + p - y) % p);
  }
  trim(r);
  return r;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      r[i + j] = static_cast<std::uint32_t>((r[i + j] + std::uint64_t{a[i]} * b[j]) % p);
    }
  }
  trim(r);
  return r;
}

Poly poly_rem(Poly a, const Poly& f, std::uint32_t p) {
  trim(a);
  const int df = degree(f);
  const std::uint32_t lead_inv = mod_inverse(f[static_cast<std::size_t>(df)], p);
  for (int da = degree(a); da >= df; da = degree(a)) {
    const std::uint64_t factor = std::uint64_t{a[static_cast<std::size_t>(da)]} * lead_inv % p;
    const std::size_t shift = static_cast<std::size_t>(da - df);
    for (int i = 0; i <= df; ++i) {
      const std::size_t idx = shift + static_cast<std::size_t>(i);
      const std::uint64_t sub = factor * f[static_cast<std::size_t>(i)] % p;
      a[idx] = static_cast<std::uint32_t>((a[idx] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::uint32_t p) {
  return poly_rem(poly_mul(a, b, p), f, p);
}

Poly poly_powmod(Poly base, std::uint64_t exp, const Poly& f, std::uint32_t p) {
  Poly result{1};
  base = poly_rem(std::move(base), f, p);
  while (exp > 0) {
    if (exp & 1U) result = poly_mulmod(result, base, f, p);
    exp >>= 1U;
    if (exp > 0) base = poly_mulmod(base, base, f, p);
  }
  return result;
}

Poly poly_gcd(Poly a, Poly b, std::uint32_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const std::uint32_t inv = mod_inverse(a.back(), p);
    for (auto& c : a) c = static_cast<std::uint32_t>(std::uint64_t{c} * inv % p);
  }
  return a;
}

bool is_prime(std::uint64_t v) {
  if (v < 2) return false;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= v; ++d) {
    if (v % d == 0) {
      out.push_back(d);
      while (v % d == 0) v /= d;
    }
  }
  if (v > 1) out.push_back(v);
  return out;
}

namespace {

// x^{p^times} mod f by repeated p-th powers.
Poly frobenius_of_x(const Poly& f, std::uint32_t p, unsigned times) {
  Poly h{0, 1};
  h = poly_rem(h, f, p);
  for (unsigned i = 0; i < times; ++i) h = poly_powmod(h, p, f, p);
  return h;
}

}  // namespace

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const Poly x{0, 1};
  if (poly_sub(frobenius_of_x(f, p, static_cast<unsigned>(n)), x, p) != Poly{}) return false;
  for (const auto r : prime_factors(static_cast<std::uint64_t>(n))) {
    const Poly h = poly_sub(frobenius_of_x(f, p, static_cast<unsigned>(n / static_cast<int>(r))), x, p);
    if (degree(poly_gcd(h, f, p)) != 0) return false;
  }
  return true;
}

bool is_primitive(const Poly& f, std::uint32_t p) {
  const int n = degree(f);
  std::uint64_t order = 1;
  for (int i = 0; i < n; ++i) order *= p;
  order -= 1;
  const Poly x{0, 1};
  const Poly one{1};
  if (poly_powmod(x, order, f, p) != one) return false;
  for (const auto r : prime_factors(order)) {
    if (poly_powmod(x, order / r, f, p) == one) return false;
  }
  return true;
}

}  // namespace cdiff::detail
