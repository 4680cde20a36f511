#include "cdiff/walsh.hpp"

#include <nlohmann/json.hpp>

#include "cdiff/error.hpp"
#include "parallel.hpp"

namespace cdiff {

namespace {

// Flat arrays of values in Z[x]/(x^p - 1), p coefficients per slot. Reduction
// to the canonical basis happens only when a final value is read out.
struct CycloArray {
  std::uint32_t p;
  std::vector<Integer> data;

  CycloArray(std::uint32_t p_, std::size_t slots) : p(p_), data(slots * p_, 0) {}
  Integer* slot(std::size_t i) noexcept { return data.data() + i * p; }
  const Integer* slot(std::size_t i) const noexcept { return data.data() + i * p; }
  std::size_t size() const noexcept { return data.size() / p; }
};

bool is_zero(const Integer* a, std::uint32_t p) {
  for (std::uint32_t i = 0; i < p; ++i) {
    if (a[i] != 0) return false;
  }
  return true;
}

// acc += a * b, or a * conj(b) when conj_b is set.
void mul_acc(Integer* acc, const Integer* a, const Integer* b, std::uint32_t p, bool conj_b = false) {
  for (std::uint32_t i = 0; i < p; ++i) {
    if (a[i] == 0) continue;
    for (std::uint32_t j = 0; j < p; ++j) {
      const std::uint32_t jj = conj_b ? (p - j) % p : j;
      std::uint32_t k = i + jj;
      if (k >= p) k -= p;
      acc[k] += a[i] * b[j];
    }
  }
}

Integer to_integer(const Integer* a, std::uint32_t p) {
  std::vector<Integer> coeffs(a, a + p);
  return CyclotomicInt::from_coefficients(p, std::move(coeffs)).as_integer();
}

Integer exact_div(Integer num, Integer den) {
  if (num % den != 0) {
    fail(ErrorCode::kNotRationalInteger, to_string(num) + " is not divisible by " + to_string(den));
  }
  return num / den;
}

Integer ipow(Integer base, std::uint32_t e) {
  Integer r = 1;
  while (e-- > 0) r *= base;
  return r;
}

void require_c(const Field& field, Element c) {
  field.check(c);
  if (c == 1) fail(ErrorCode::kInvalidArgument, "Walsh characterizations need c != 1");
}

// G(u, v) = W(u, v) conj W(u, c v) for every pair, indexed u * q + v.
CycloArray g_array(const WalshTable& w, Element c) {
  const Field& field = w.field();
  const Element q = w.q();
  const std::uint32_t p = field.p();
  CycloArray g(p, std::size_t{q} * q);
  for (Element u = 0; u < q; ++u) {
    for (Element v = 0; v < q; ++v) {
      const auto h1 = w.histogram(u, v);
      const auto h2 = w.histogram(u, field.mul(c, v));
      Integer* out = g.slot(std::size_t{u} * q + v);
      for (std::uint32_t i = 0; i < p; ++i) {
        if (h1[i] == 0) continue;
        for (std::uint32_t j = 0; j < p; ++j) out[(i + p - j) % p] += Integer{h1[i]} * h2[j];
      }
    }
  }
  return g;
}

// Additive group of F_q^dim with dim in {1, 2}; index of x - y.
struct GroupSub {
  Element q;
  unsigned dim;
  std::vector<Element> sub;

  GroupSub(const Field& field, unsigned dim_) : q(field.q()), dim(dim_), sub(std::size_t{q} * q) {
    for (Element x = 0; x < q; ++x) {
      for (Element y = 0; y < q; ++y) sub[std::size_t{x} * q + y] = field.sub(x, y);
    }
  }
  std::size_t diff(std::size_t x, std::size_t y) const {
    if (dim == 1) return sub[x * q + y];
    const std::size_t xu = x / q, xv = x % q, yu = y / q, yv = y % q;
    return std::size_t{sub[xu * q + yu]} * q + sub[xv * q + yv];
  }
};

// (h * g)(X) = sum_w h(w) g(X - w).
CycloArray convolve(const CycloArray& h, const CycloArray& g, const GroupSub& group) {
  const std::uint32_t p = h.p;
  const std::size_t n = h.size();
  CycloArray out(p, n);
  detail::parallel_for(n, 0, [&](std::size_t x, unsigned) {
    Integer* acc = out.slot(x);
    for (std::size_t w = 0; w < n; ++w) {
      const Integer* hw = h.slot(w);
      if (is_zero(hw, p)) continue;
      mul_acc(acc, hw, g.slot(group.diff(x, w)), p);
    }
  });
  return out;
}

// Returns sum_X conj g(X) (g^{*j})(X) for j = 1..delta.
std::vector<Integer> self_convolution_sums(const CycloArray& g, const GroupSub& group, std::uint32_t delta) {
  const std::uint32_t p = g.p;
  std::vector<Integer> sums;
  CycloArray h = g;
  for (std::uint32_t j = 1; j <= delta; ++j) {
    if (j > 1) h = convolve(h, g, group);
    std::vector<Integer> acc(p, 0);
    for (std::size_t x = 0; x < g.size(); ++x) mul_acc(acc.data(), h.slot(x), g.slot(x), p, true);
    sums.push_back(to_integer(acc.data(), p));
  }
  return sums;
}

}  // namespace

WalshTable WalshTable::compute(const FunctionTable& f, const SweepOptions& options) {
  const Field& field = f.field();
  const Element q = field.q();
  if (q > kMaxOrder) fail(ErrorCode::kSizeGuardExceeded, "Walsh tables limited to q <= " + std::to_string(kMaxOrder));
  const std::uint32_t p = field.p();
  std::vector<std::uint8_t> tr_ux(std::size_t{q} * q);
  for (Element u = 0; u < q; ++u) {
    for (Element x = 0; x < q; ++x) tr_ux[std::size_t{u} * q + x] = static_cast<std::uint8_t>(field.trace(field.mul(u, x)));
  }
  std::vector<std::uint32_t> counts(std::size_t{q} * q * p, 0);
  detail::parallel_for(q, options.threads, [&](std::size_t v, unsigned) {
    std::vector<std::uint32_t> tv(q);
    for (Element x = 0; x < q; ++x) tv[x] = field.trace(field.mul(static_cast<Element>(v), f(x)));
    for (Element u = 0; u < q; ++u) {
      std::uint32_t* h = counts.data() + (std::size_t{u} * q + v) * p;
      const std::uint8_t* tu = tr_ux.data() + std::size_t{u} * q;
      for (Element x = 0; x < q; ++x) {
        std::uint32_t k = tv[x] + p - tu[x];
        if (k >= p) k -= p;
        ++h[k];
      }
    }
  });
  return WalshTable(field, std::move(counts));
}

CyclotomicInt WalshTable::at(Element u, Element v) const {
  const auto h = histogram(u, v);
  return CyclotomicInt::from_coefficients(field_.p(), std::vector<Integer>(h.begin(), h.end()));
}

CyclotomicInt walsh(const FunctionTable& f, Element u, Element v) {
  const Field& field = f.field();
  field.check(u);
  field.check(v);
  const std::uint32_t p = field.p();
  std::vector<Integer> h(p, 0);
  for (Element x = 0; x < f.q(); ++x) {
    ++h[(field.trace(field.mul(v, f(x))) + p - field.trace(field.mul(u, x))) % p];
  }
  return CyclotomicInt::from_coefficients(p, std::move(h));
}

nlohmann::json walsh_to_json(const WalshTable& table) {
  nlohmann::json entries = nlohmann::json::array();
  for (Element u = 0; u < table.q(); ++u) {
    for (Element v = 0; v < table.q(); ++v) {
      nlohmann::json coeffs = nlohmann::json::array();
      for (auto c : table.at(u, v).coefficients()) coeffs.push_back(to_string(c));
      entries.push_back({u, v, std::move(coeffs)});
    }
  }
  return {{"field", field_to_json(table.field())}, {"p", table.field().p()}, {"entries", std::move(entries)}};
}

std::vector<Integer> phi_coefficients(std::uint32_t delta) {
  if (delta < 1) fail(ErrorCode::kInvalidArgument, "delta must be >= 1");
  std::vector<Integer> a{1};
  for (std::uint32_t r = 1; r <= delta; ++r) {
    std::vector<Integer> next(a.size() + 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      next[i + 1] += a[i];
      next[i] -= Integer{r} * a[i];
    }
    a = std::move(next);
  }
  return a;
}

Integer pcn_power_sum(const FunctionTable& f, Element c) {
  require_c(f.field(), c);
  const auto w = WalshTable::compute(f);
  const auto g = g_array(w, c);
  std::vector<Integer> acc(g.p, 0);
  for (std::size_t x = 0; x < g.size(); ++x) mul_acc(acc.data(), g.slot(x), g.slot(x), g.p, true);
  return to_integer(acc.data(), g.p);
}

ApcnStatistic apcn_statistic(const FunctionTable& f, Element c, Element max_q) {
  require_c(f.field(), c);
  if (f.q() > max_q) {
    fail(ErrorCode::kSizeGuardExceeded, "APcN statistic limited to q <= " + std::to_string(max_q));
  }
  const auto w = WalshTable::compute(f);
  const auto g = g_array(w, c);
  const auto sums = self_convolution_sums(g, GroupSub(f.field(), 2), 2);
  const Integer q = f.q();
  ApcnStatistic out;
  out.lhs = sums[1];
  out.rhs = 3 * q * q * sums[0] - 2 * ipow(q, 6);
  return out;
}

ConvolutionStatistic convolution_statistic(const FunctionTable& f, Element c, std::uint32_t delta, WalshSide side,
                                           std::uint64_t walsh_limit) {
  const Field& field = f.field();
  require_c(field, c);
  const auto a_coef = phi_coefficients(delta);
  const Element q = f.q();

  // power_sums[j] = sum_a sum_gamma N_a(gamma)^(j+1)
  std::vector<Integer> power_sums(delta + 1, 0);
  std::vector<std::uint32_t> hist(q);
  for (Element a = 0; a < q; ++a) {
    std::fill(hist.begin(), hist.end(), 0U);
    for (Element x = 0; x < q; ++x) ++hist[field.sub(f(field.add(x, a)), field.mul(c, f(x)))];
    for (auto n : hist) {
      if (n == 0) continue;
      Integer pw = n;
      for (std::uint32_t j = 1; j <= delta; ++j) {
        pw *= n;
        power_sums[j] += pw;
      }
    }
  }
  const Integer q2 = Integer{q} * q;
  ConvolutionStatistic out;
  out.delta = delta;
  out.count_side = q2 * a_coef[0];
  for (std::uint32_t j = 1; j <= delta; ++j) out.count_side += a_coef[j] * power_sums[j];

  if (side == WalshSide::kSkip) return out;
  const long double cost = static_cast<long double>(delta) * q2 * q2;
  if (q > WalshTable::kMaxOrder || cost > static_cast<long double>(walsh_limit)) {
    if (side == WalshSide::kRequire) {
      fail(ErrorCode::kSizeGuardExceeded, "Walsh-side convolution needs about " + std::to_string(static_cast<double>(cost)) +
                                              " products, limit " + std::to_string(walsh_limit));
    }
    return out;
  }
  const auto w = WalshTable::compute(f);
  const auto g = g_array(w, c);
  const auto sums = self_convolution_sums(g, GroupSub(field, 2), delta);
  Integer total = q2 * a_coef[0];
  for (std::uint32_t j = 1; j <= delta; ++j) total += a_coef[j] * exact_div(sums[j - 1], ipow(q2, j));
  out.walsh_side = total;
  return out;
}

Integer derivative_walsh_statistic(const FunctionTable& f, Element c, Element a, std::uint32_t delta,
                                   std::uint64_t limit) {
  const Field& field = f.field();
  require_c(field, c);
  field.check(a);
  const auto a_coef = phi_coefficients(delta);
  const Element q = f.q();
  if (static_cast<long double>(delta) * q * q > static_cast<long double>(limit)) {
    fail(ErrorCode::kSizeGuardExceeded, "derivative Walsh statistic exceeds the size limit");
  }
  const std::uint32_t p = field.p();
  std::vector<Element> d(q);
  for (Element x = 0; x < q; ++x) d[x] = field.sub(f(field.add(x, a)), field.mul(c, f(x)));
  CycloArray wd(p, q);
  for (Element v = 0; v < q; ++v) {
    Integer* h = wd.slot(v);
    for (Element x = 0; x < q; ++x) ++h[field.trace(field.mul(v, d[x]))];
  }
  const auto sums = self_convolution_sums(wd, GroupSub(field, 1), delta);
  Integer total = Integer{q} * a_coef[0];
  for (std::uint32_t j = 1; j <= delta; ++j) total += a_coef[j] * exact_div(sums[j - 1], ipow(q, j));
  return total;
}

DerivativeProfile derivative_walsh_profile(const FunctionTable& f, Element c, std::uint32_t delta) {
  DerivativeProfile out;
  out.c = c;
  out.delta = delta;
  out.per_a.resize(f.q());
  detail::parallel_for(f.q(), 0, [&](std::size_t a, unsigned) {
    out.per_a[a] = derivative_walsh_statistic(f, c, static_cast<Element>(a), delta);
  });
  out.all_zero = std::all_of(out.per_a.begin(), out.per_a.end(), [](Integer v) { return v == 0; });
  return out;
}

}  // namespace cdiff
