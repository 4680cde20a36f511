#include "cdiff/field.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cdiff/error.hpp"
#include "polynomial_mod_p.hpp"

namespace cdiff {
namespace detail {

enum class AddMode { kXor, kPrime, kSplit, kDigits };

struct FieldData {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  Element q = 0;
  std::vector<std::uint32_t> modulus;
  bool primitive_modulus = false;
  Element generator = 1;

  AddMode add_mode = AddMode::kDigits;
  Element lo_q = 1;
  Element hi_q = 1;
  std::vector<Element> add_lo, add_hi, neg_lo, neg_hi;

  bool has_logs = false;
  std::vector<std::uint32_t> log;  // log[0] unused
  std::vector<Element> exp;        // length 2 (q - 1)

  std::vector<std::uint32_t> trace_basis;  // Tr(x^i), i < n
  std::optional<Element> non_square;
};

}  // namespace detail

namespace {

using detail::AddMode;
using detail::FieldData;
using detail::Poly;

std::vector<std::uint32_t> to_digits(Element x, std::uint32_t p, std::uint32_t n) {
  std::vector<std::uint32_t> d(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    d[i] = x % p;
    x /= p;
  }
  return d;
}

Element from_digit_span(std::span<const std::uint32_t> d, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = d.size(); i > 0; --i) r = r * p + d[i - 1];
  return static_cast<Element>(r);
}

Element digit_add(const FieldData& f, Element x, Element y) {
  std::uint64_t r = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    const std::uint32_t s = (x % f.p + y % f.p) % f.p;
    r += s * place;
    place *= f.p;
    x /= f.p;
    y /= f.p;
  }
  return static_cast<Element>(r);
}

Element digit_neg(const FieldData& f, Element x) {
  std::uint64_t r = 0;
  std::uint64_t place = 1;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    const std::uint32_t d = x % f.p;
    r += ((f.p - d) % f.p) * place;
    place *= f.p;
    x /= f.p;
  }
  return static_cast<Element>(r);
}

Element schoolbook_mul(const FieldData& f, Element x, Element y) {
  Poly a = to_digits(x, f.p, f.n);
  Poly b = to_digits(y, f.p, f.n);
  detail::trim(a);
  detail::trim(b);
  Poly r = detail::poly_mulmod(a, b, f.modulus, f.p);
  r.resize(f.n, 0);
  return from_digit_span(r, f.p);
}

Element schoolbook_pow(const FieldData& f, Element x, std::uint64_t e) {
  Element result = 1;
  while (e > 0) {
    if (e & 1U) result = schoolbook_mul(f, result, x);
    e >>= 1U;
    if (e > 0) x = schoolbook_mul(f, x, x);
  }
  return result;
}

// Multiplies the digit vector by x and reduces by the monic modulus.
void times_x(std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& modulus, std::uint32_t p) {
  const std::size_t n = d.size();
  const std::uint64_t top = d[n - 1];
  for (std::size_t i = n - 1; i > 0; --i) d[i] = d[i - 1];
  d[0] = 0;
  if (top != 0) {
    for (std::size_t i = 0; i < n; ++i) {
      d[i] = static_cast<std::uint32_t>((d[i] + (p - top * modulus[i] % p)) % p);
    }
  }
}

bool has_full_order(const FieldData& f, Element g, const std::vector<std::uint64_t>& factors) {
  if (g == 0) return false;
  const std::uint64_t order = f.q - 1;
  if (schoolbook_pow(f, g, order) != 1) return false;
  return std::all_of(factors.begin(), factors.end(),
                     [&](std::uint64_t r) { return schoolbook_pow(f, g, order / r) != 1; });
}

void build_add_tables(FieldData& f) {
  if (f.p == 2) {
    f.add_mode = AddMode::kXor;
    return;
  }
  if (f.n == 1) {
    f.add_mode = AddMode::kPrime;
    return;
  }
  const std::uint32_t lo_digits = f.n / 2;
  const std::uint32_t hi_digits = f.n - lo_digits;
  std::uint64_t lo_q = 1, hi_q = 1;
  for (std::uint32_t i = 0; i < lo_digits; ++i) lo_q *= f.p;
  for (std::uint32_t i = 0; i < hi_digits; ++i) hi_q *= f.p;
  if (hi_q > 1024) {
    f.add_mode = AddMode::kDigits;
    return;
  }
  f.add_mode = AddMode::kSplit;
  f.lo_q = static_cast<Element>(lo_q);
  f.hi_q = static_cast<Element>(hi_q);

  auto fill = [&](std::uint32_t digits, std::uint64_t order, Element scale,
                  std::vector<Element>& add, std::vector<Element>& neg) {
    add.resize(order * order);
    neg.resize(order);
    FieldData sub = f;
    sub.n = digits;
    for (Element x = 0; x < order; ++x) {
      neg[x] = digit_neg(sub, x) * scale;
      for (Element y = 0; y < order; ++y) add[x * order + y] = digit_add(sub, x, y) * scale;
    }
  };
  fill(lo_digits, lo_q, 1, f.add_lo, f.neg_lo);
  fill(hi_digits, hi_q, f.lo_q, f.add_hi, f.neg_hi);
}

void build_mul_tables(FieldData& f, std::uint64_t log_table_limit) {
  const auto factors = detail::prime_factors(f.q - 1);
  const Element x_rank = f.n > 1 ? f.p : (f.p - f.modulus[0]) % f.p;
  if (f.primitive_modulus) {
    f.generator = x_rank;
  } else {
    f.generator = 0;
    for (Element g = 1; g < f.q; ++g) {
      if (has_full_order(f, g, factors)) {
        f.generator = g;
        break;
      }
    }
  }
  if (f.q > log_table_limit) return;

  f.has_logs = true;
  const Element order = f.q - 1;
  f.log.assign(f.q, 0);
  f.exp.assign(2 * static_cast<std::size_t>(order), 0);
  if (f.primitive_modulus && f.n > 1) {
    std::vector<std::uint32_t> cur(f.n, 0);
    cur[0] = 1;
    for (Element k = 0; k < order; ++k) {
      const Element r = from_digit_span(cur, f.p);
      f.exp[k] = r;
      f.log[r] = k;
      times_x(cur, f.modulus, f.p);
    }
  } else {
    Element cur = 1;
    for (Element k = 0; k < order; ++k) {
      f.exp[k] = cur;
      f.log[cur] = k;
      cur = f.n == 1 ? static_cast<Element>(std::uint64_t{cur} * f.generator % f.p)
                     : schoolbook_mul(f, cur, f.generator);
    }
  }
  for (Element k = 0; k < order; ++k) f.exp[order + k] = f.exp[k];
}

}  // namespace

Field Field::build(std::uint32_t p, std::uint32_t n, std::optional<std::vector<std::uint32_t>> modulus,
                   std::uint64_t log_table_limit) {
  if (!detail::is_prime(p)) fail(ErrorCode::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  if (n < 1) fail(ErrorCode::kDegreeMismatch, "extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(ErrorCode::kSizeGuardExceeded, "field order exceeds 2^31");
  }

  auto data = std::make_shared<FieldData>();
  FieldData& f = *data;
  f.p = p;
  f.n = n;
  f.q = static_cast<Element>(q);

  if (modulus) {
    if (modulus->size() != n + 1) {
      fail(ErrorCode::kDegreeMismatch, "modulus must have n + 1 = " + std::to_string(n + 1) + " coefficients");
    }
    if (modulus->back() != 1) fail(ErrorCode::kDegreeMismatch, "modulus must be monic");
    for (auto c : *modulus) {
      if (c >= p) fail(ErrorCode::kInvalidArgument, "modulus coefficient out of range for F_" + std::to_string(p));
    }
    if (!detail::is_irreducible(*modulus, p)) fail(ErrorCode::kReducibleModulus, "modulus factors over F_p");
    f.modulus = *modulus;
    f.primitive_modulus = detail::is_primitive(f.modulus, p);
  } else {
    for (std::uint64_t r = 0; r < q; ++r) {
      Poly cand = to_digits(static_cast<Element>(r), p, n);
      cand.push_back(1);
      if (detail::is_irreducible(cand, p) && detail::is_primitive(cand, p)) {
        f.modulus = std::move(cand);
        f.primitive_modulus = true;
        break;
      }
    }
  }

  build_add_tables(f);
  build_mul_tables(f, log_table_limit);

  Field field(data);
  f.trace_basis.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> d(n, 0);
    d[i] = 1;
    Element xi = from_digit_span(d, p);
    Element acc = 0;
    for (std::uint32_t j = 0; j < n; ++j) {
      acc = field.add(acc, xi);
      xi = field.pow(xi, p);
    }
    f.trace_basis[i] = acc;  // lies in F_p, so its rank is the value
  }
  if (p != 2) {
    for (Element x = 2; x < f.q; ++x) {
      if (!field.is_square(x)) {
        f.non_square = x;
        break;
      }
    }
  }
  return field;
}

std::uint32_t Field::p() const noexcept { return data_->p; }
std::uint32_t Field::n() const noexcept { return data_->n; }
Element Field::q() const noexcept { return data_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return data_->modulus; }
bool Field::has_log_tables() const noexcept { return data_->has_logs; }
bool Field::modulus_is_primitive() const noexcept { return data_->primitive_modulus; }
Element Field::primitive_element() const noexcept { return data_->generator; }

void Field::check(std::uint64_t x) const {
  if (x >= q()) {
    fail(ErrorCode::kRankOutOfRange, "rank " + std::to_string(x) + " not in [0, " + std::to_string(q()) + ")");
  }
}

Element Field::add(Element x, Element y) const noexcept {
  const FieldData& f = *data_;
  switch (f.add_mode) {
    case AddMode::kXor:
      return x ^ y;
    case AddMode::kPrime: {
      const std::uint64_t s = std::uint64_t{x} + y;
      return static_cast<Element>(s >= f.p ? s - f.p : s);
    }
    case AddMode::kSplit:
      return f.add_hi[(x / f.lo_q) * f.hi_q + y / f.lo_q] + f.add_lo[(x % f.lo_q) * f.lo_q + y % f.lo_q];
    case AddMode::kDigits:
      break;
  }
  return digit_add(f, x, y);
}

Element Field::neg(Element x) const noexcept {
  const FieldData& f = *data_;
  switch (f.add_mode) {
    case AddMode::kXor:
      return x;
    case AddMode::kPrime:
      return x == 0 ? 0 : f.p - x;
    case AddMode::kSplit:
      return f.neg_hi[x / f.lo_q] + f.neg_lo[x % f.lo_q];
    case AddMode::kDigits:
      break;
  }
  return digit_neg(f, x);
}

Element Field::sub(Element x, Element y) const noexcept { return add(x, neg(y)); }

Element Field::mul(Element x, Element y) const noexcept {
  if (x == 0 || y == 0) return 0;
  const FieldData& f = *data_;
  if (f.has_logs) return f.exp[f.log[x] + f.log[y]];
  if (f.n == 1) return static_cast<Element>(std::uint64_t{x} * y % f.p);
  return schoolbook_mul(f, x, y);
}

Element Field::inv(Element x) const {
  if (x == 0) fail(ErrorCode::kDivisionByZero, "inverse of zero");
  const FieldData& f = *data_;
  if (f.has_logs) return f.exp[(f.q - 1 - f.log[x]) % (f.q - 1)];
  return pow(x, static_cast<std::int64_t>(f.q) - 2);
}

Element Field::div(Element x, Element y) const { return mul(x, inv(y)); }

Element Field::pow(Element x, std::int64_t e) const {
  const FieldData& f = *data_;
  if (x == 0) {
    if (e < 0) fail(ErrorCode::kDivisionByZero, "negative power of zero");
    return e == 0 ? 1 : 0;
  }
  const std::int64_t order = static_cast<std::int64_t>(f.q) - 1;
  std::int64_t r = e % order;
  if (r < 0) r += order;
  const auto ue = static_cast<std::uint64_t>(r);
  if (f.has_logs) return f.exp[(std::uint64_t{f.log[x]} * ue) % static_cast<std::uint64_t>(order)];
  if (f.n == 1) return detail::mod_pow(x, ue, f.p);
  return schoolbook_pow(f, x, ue);
}

Element Field::frobenius(Element x, std::uint32_t times) const noexcept {
  times %= data_->n;
  for (std::uint32_t i = 0; i < times; ++i) x = pow(x, data_->p);
  return x;
}

std::uint32_t Field::trace(Element x) const noexcept {
  const FieldData& f = *data_;
  std::uint64_t acc = 0;
  for (std::uint32_t i = 0; i < f.n; ++i) {
    acc += std::uint64_t{x % f.p} * f.trace_basis[i];
    x /= f.p;
  }
  return static_cast<std::uint32_t>(acc % f.p);
}

Element Field::trace_rel(std::uint32_t g, Element x) const {
  if (g == 0 || n() % g != 0) {
    fail(ErrorCode::kNonDivisorSubfieldDegree, std::to_string(g) + " does not divide " + std::to_string(n()));
  }
  Element acc = 0;
  Element term = x;
  for (std::uint32_t i = 0; i < n() / g; ++i) {
    acc = add(acc, term);
    term = frobenius(term, g);
  }
  return acc;
}

bool Field::is_square(Element x) const noexcept {
  if (p() == 2 || x == 0) return true;
  return pow(x, (static_cast<std::int64_t>(q()) - 1) / 2) == 1;
}

std::optional<Element> Field::sqrt(Element x) const {
  if (x == 0) return Element{0};
  if (p() == 2) return pow(x, static_cast<std::int64_t>(q()) / 2);
  if (!is_square(x)) return std::nullopt;
  // Tonelli-Shanks with q - 1 = 2^s * t, t odd.
  std::int64_t t = static_cast<std::int64_t>(q()) - 1;
  std::uint32_t s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  Element z = pow(*data_->non_square, t);
  Element r = pow(x, (t + 1) / 2);
  Element c = pow(x, t);
  std::uint32_t m = s;
  while (c != 1) {
    std::uint32_t i = 0;
    Element cc = c;
    while (cc != 1) {
      cc = mul(cc, cc);
      ++i;
    }
    Element b = z;
    for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = mul(b, b);
    r = mul(r, b);
    z = mul(b, b);
    c = mul(c, z);
    m = i;
  }
  return r;
}

Element Field::from_int(std::int64_t v) const noexcept {
  const auto pp = static_cast<std::int64_t>(p());
  return static_cast<Element>(((v % pp) + pp) % pp);
}

std::vector<std::uint32_t> Field::digits(Element x) const { return to_digits(x, p(), n()); }

Element Field::from_digits(std::span<const std::uint32_t> d) const {
  if (d.size() != n()) fail(ErrorCode::kInvalidArgument, "digit vector length must equal n");
  for (auto v : d) {
    if (v >= p()) fail(ErrorCode::kInvalidArgument, "digit out of range");
  }
  return from_digit_span(d, p());
}

std::vector<Element> Field::elements() const {
  std::vector<Element> out(q());
  for (Element i = 0; i < q(); ++i) out[i] = i;
  return out;
}

Element Field::lo_order() const noexcept { return data_->lo_q; }
Element Field::hi_order() const noexcept { return data_->hi_q; }
std::span<const Element> Field::add_lo_table() const noexcept { return data_->add_lo; }
std::span<const Element> Field::add_hi_table() const noexcept { return data_->add_hi; }
std::span<const Element> Field::neg_lo_table() const noexcept { return data_->neg_lo; }
std::span<const Element> Field::neg_hi_table() const noexcept { return data_->neg_hi; }

std::string Field::describe() const {
  std::ostringstream os;
  os << "GF(" << p() << "^" << n() << ") mod [";
  for (std::size_t i = 0; i < modulus().size(); ++i) os << (i ? "," : "") << modulus()[i];
  os << "]";
  return os.str();
}

bool operator==(const Field& a, const Field& b) {
  return a.data_ == b.data_ || (a.p() == b.p() && a.n() == b.n() && a.modulus() == b.modulus());
}

Element arith(const Field& field, ArithOp op, Element x, std::int64_t y) {
  field.check(x);
  const bool binary = op == ArithOp::kAdd || op == ArithOp::kSub || op == ArithOp::kMul;
  if (binary) {
    if (y < 0) fail(ErrorCode::kRankOutOfRange, "negative rank");
    field.check(static_cast<std::uint64_t>(y));
  }
  const auto ey = static_cast<Element>(y);
  switch (op) {
    case ArithOp::kAdd: return field.add(x, ey);
    case ArithOp::kSub: return field.sub(x, ey);
    case ArithOp::kMul: return field.mul(x, ey);
    case ArithOp::kInv: return field.inv(x);
    case ArithOp::kPow: return field.pow(x, y);
    case ArithOp::kNeg: return field.neg(x);
    case ArithOp::kFrobenius: return field.frobenius(x);
  }
  fail(ErrorCode::kInvalidArgument, "unknown arithmetic operation");
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic) {
  if (!detail::is_prime(p)) fail(ErrorCode::kNonPrimeCharacteristic, std::to_string(p) + " is not prime");
  detail::Poly f(monic.begin(), monic.end());
  detail::trim(f);
  if (f.empty() || f.back() != 1) return false;
  return detail::is_irreducible(f, p);
}

nlohmann::json field_to_json(const Field& field) {
  return nlohmann::json{{"p", field.p()}, {"n", field.n()}, {"modulus", field.modulus()}};
}

Field field_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("n") || !j.contains("modulus") ||
      !j.at("p").is_number_unsigned() || !j.at("n").is_number_unsigned() || !j.at("modulus").is_array()) {
    fail(ErrorCode::kSchemaViolation, "field block needs unsigned p, n and a modulus array");
  }
  std::vector<std::uint32_t> modulus;
  for (const auto& c : j.at("modulus")) {
    if (!c.is_number_unsigned()) fail(ErrorCode::kSchemaViolation, "modulus coefficients must be unsigned");
    modulus.push_back(c.get<std::uint32_t>());
  }
  return Field::build(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(), modulus);
}

}  // namespace cdiff
