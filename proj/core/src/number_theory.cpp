#include "cdiff/number_theory.hpp"

#include <algorithm>
#include <numeric>

#include "cdiff/error.hpp"
#include "polynomial_mod_p.hpp"

namespace cdiff {

namespace {

using U128 = unsigned __int128;

U128 upow(std::uint64_t base, std::uint64_t e) {
  U128 r = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    r *= base;
    if (r > (U128{1} << 100)) fail(ErrorCode::kInvalidArgument, "power too large for exact gcd");
  }
  return r;
}

U128 ugcd(U128 a, U128 b) {
  while (b != 0) {
    const U128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

void check_params(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  if (!detail::is_prime(p)) fail(ErrorCode::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (k < 1 || n < 1) fail(ErrorCode::kInvalidArgument, "k and n must be positive");
}

// sum_{j=lo}^{hi-1} p^(k j) mod (q - 1)
std::uint64_t geometric_exponent(std::uint64_t p, std::uint32_t k, std::uint32_t lo, std::uint32_t hi,
                                 std::uint64_t order) {
  const std::uint64_t pk = detail::mod_pow(p, k, order);
  std::uint64_t term = detail::mod_pow(pk, lo, order);
  std::uint64_t sum = 0;
  for (std::uint32_t j = lo; j < hi; ++j) {
    sum = (sum + term) % order;
    term = term * pk % order;
  }
  return sum;
}

}  // namespace

std::uint64_t gcd_power_direct(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  check_params(p, k, n);
  return static_cast<std::uint64_t>(ugcd(upow(p, k) + 1, upow(p, n) - 1));
}

std::uint64_t gcd_power_formula(std::uint32_t p, std::uint32_t k, std::uint32_t n) {
  check_params(p, k, n);
  const std::uint32_t g = std::gcd(k, n);
  std::uint64_t formula = 0;
  if (p == 2) {
    formula = static_cast<std::uint64_t>((upow(2, std::gcd(2 * k, n)) - 1) / (upow(2, g) - 1));
  } else if ((n / g) % 2 == 1) {
    formula = 2;
  } else {
    formula = static_cast<std::uint64_t>(upow(p, g) + 1);
  }
  const std::uint64_t direct = gcd_power_direct(p, k, n);
  if (formula != direct) {
    fail(ErrorCode::kFormulaMismatch, "gcd(" + std::to_string(p) + "^" + std::to_string(k) + "+1, " +
                                          std::to_string(p) + "^" + std::to_string(n) + "-1): formula " +
                                          std::to_string(formula) + ", direct " + std::to_string(direct));
  }
  return formula;
}

TrinomialOutcome trinomial_roots(const Field& field, std::uint32_t k, Element a, Element b) {
  field.check(a);
  field.check(b);
  if (k < 1) fail(ErrorCode::kInvalidArgument, "k must be positive");
  const std::uint32_t p = field.p();
  const std::uint32_t n = field.n();
  TrinomialOutcome out;
  out.p = p;
  out.n = n;
  out.k = k % n;
  out.a = a;
  out.b = b;
  if (out.k == 0) {
    fail(ErrorCode::kSubfieldEdgeCase,
         "k = 0 mod n makes z^(p^k) the identity; if m=1, then k=n, so F(x)=x^2 is the square case");
  }
  k = out.k;
  out.g = std::gcd(n, k);
  out.m = n / out.g;
  const std::uint32_t m = out.m;

  if (a == 0) {
    out.alpha = 0;
    out.beta = b;
    out.count = 1;
    out.roots = {field.frobenius(b, n - k)};
    return out;
  }

  const std::uint64_t order = field.q() - 1;
  auto s = [&](std::uint32_t i) { return geometric_exponent(p, k, i + 1, m, order); };
  out.alpha = field.pow(a, static_cast<std::int64_t>(geometric_exponent(p, k, 0, m, order)));
  Element beta = 0;
  for (std::uint32_t i = 0; i < m; ++i) {
    beta = field.add(beta, field.mul(field.pow(a, static_cast<std::int64_t>(s(i))), field.frobenius(b, k * i)));
  }
  out.beta = beta;

  if (out.alpha != 1) {
    out.count = 1;
    out.roots = {field.div(beta, field.sub(1, out.alpha))};
  } else if (beta != 0) {
    out.count = 0;
  } else {
    Element e = 1;
    while (field.trace_rel(out.g, e) == 0) ++e;
    Element x = 0;
    Element inner = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      inner = field.add(inner, field.frobenius(e, k * i));
      const Element term = field.mul(inner, field.pow(a, static_cast<std::int64_t>(s(i))));
      x = field.add(x, field.mul(term, field.frobenius(b, k * i)));
    }
    x = field.div(x, field.trace_rel(out.g, e));

    const auto pk_minus_1 = static_cast<std::int64_t>((detail::mod_pow(p, k, order) + order - 1) % order);
    Element tau = 1;
    while (tau < field.q() && field.pow(tau, pk_minus_1) != a) ++tau;
    if (tau == field.q()) fail(ErrorCode::kFormulaMismatch, "no (p^k - 1)-th root of a although alpha = 1");
    for (Element d = 0; d < field.q(); ++d) {
      if (field.frobenius(d, out.g) == d) out.roots.push_back(field.add(x, field.mul(d, tau)));
    }
    std::sort(out.roots.begin(), out.roots.end());
    out.count = out.roots.size();
  }

  const auto pk = static_cast<std::uint32_t>(k);
  for (auto z : out.roots) {
    if (field.sub(field.sub(field.frobenius(z, pk), field.mul(a, z)), b) != 0) {
      fail(ErrorCode::kFormulaMismatch, "trinomial root " + std::to_string(z) + " fails substitution");
    }
  }
  return out;
}

std::vector<Element> solve_quadratic(const Field& field, Element A, Element B) {
  field.check(A);
  field.check(B);
  std::vector<Element> roots;
  if (field.p() == 2) {
    const std::uint32_t n = field.n();
    if (A == 0) {
      roots = {field.frobenius(B, n - 1)};
    } else {
      // x = A y with y^2 + y = z.
      const Element z = field.div(B, field.mul(A, A));
      if (field.trace(z) != 0) return {};
      Element theta = 1;
      while (field.trace(theta) == 0) ++theta;
      // y = sum_i (sum_{j > i} theta^(2^j)) z^(2^i)
      Element y = 0;
      for (std::uint32_t i = 0; i < n; ++i) {
        Element inner = 0;
        for (std::uint32_t j = i + 1; j < n; ++j) inner = field.add(inner, field.frobenius(theta, j));
        y = field.add(y, field.mul(inner, field.frobenius(z, i)));
      }
      roots = {field.mul(A, y), field.mul(A, field.add(y, 1))};
    }
  } else {
    const Element two = field.from_int(2);
    const Element disc = field.sub(field.mul(A, A), field.mul(field.from_int(4), B));
    if (disc == 0) {
      roots = {field.div(field.neg(A), two)};
    } else if (auto s = field.sqrt(disc)) {
      roots = {field.div(field.sub(*s, A), two), field.div(field.sub(field.neg(*s), A), two)};
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  for (auto x : roots) {
    if (field.add(field.add(field.mul(x, x), field.mul(A, x)), B) != 0) {
      fail(ErrorCode::kFormulaMismatch, "quadratic root " + std::to_string(x) + " fails substitution");
    }
  }
  return roots;
}

Element chebyshev_eval(const Field& field, std::uint64_t l, Element y) {
  field.check(y);
  const Element two = field.from_int(2);
  if (l == 0) return two;
  // Ladder on (T_m, T_{m+1}): T_{2m} = T_m^2 - 2, T_{2m+1} = T_m T_{m+1} - y.
  Element lo = y;
  Element hi = field.sub(field.mul(y, y), two);
  int top = 63;
  while (((l >> top) & 1U) == 0) --top;
  for (int bit = top - 1; bit >= 0; --bit) {
    const Element cross = field.sub(field.mul(lo, hi), y);
    if ((l >> bit) & 1U) {
      lo = cross;
      hi = field.sub(field.mul(hi, hi), two);
    } else {
      hi = cross;
      lo = field.sub(field.mul(lo, lo), two);
    }
  }
  return lo;
}

bool chebyshev_is_permutation(std::uint32_t p, std::uint32_t n, std::uint64_t l) {
  check_params(p, 1, n);
  if (l < 1) fail(ErrorCode::kInvalidArgument, "Chebyshev index must be positive");
  return ugcd(l, upow(p, 2 * std::uint64_t{n}) - 1) == 1;
}

}  // namespace cdiff
