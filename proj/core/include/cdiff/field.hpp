#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace cdiff {

// Field elements are ranks in [0, q): the base-p digits of the rank are the
// polynomial-basis coefficients, digit i being the coefficient of x^i.
// Rank 0 is the additive identity and rank 1 the multiplicative identity.
using Element = std::uint32_t;

namespace detail {
struct FieldData;
}

// GF(p^n) modelled as F_p[x]/(modulus). Immutable after construction; copies
// share the precomputed tables and are safe to read from many threads.
class Field {
 public:
  static constexpr std::uint64_t kDefaultLogTableLimit = std::uint64_t{1} << 20;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 31;

  // Validates p, n and the modulus. Without a modulus the lexicographically
  // smallest primitive polynomial of degree n is used (coefficient vectors
  // read as base-p integers, constant term least significant).
  static Field build(std::uint32_t p, std::uint32_t n,
                     std::optional<std::vector<std::uint32_t>> modulus = std::nullopt,
                     std::uint64_t log_table_limit = kDefaultLogTableLimit);

  std::uint32_t p() const noexcept;
  std::uint32_t n() const noexcept;
  Element q() const noexcept;
  // Monic, constant term first, length n + 1.
  const std::vector<std::uint32_t>& modulus() const noexcept;
  bool has_log_tables() const noexcept;
  bool modulus_is_primitive() const noexcept;
  // Smallest-rank generator of the multiplicative group (rank p when the
  // modulus is primitive and n > 1).
  Element primitive_element() const noexcept;

  bool contains(std::uint64_t x) const noexcept { return x < q(); }
  // Throws kRankOutOfRange.
  void check(std::uint64_t x) const;

  Element add(Element x, Element y) const noexcept;
  Element sub(Element x, Element y) const noexcept;
  Element neg(Element x) const noexcept;
  Element mul(Element x, Element y) const noexcept;
  // Throws kDivisionByZero for x = 0.
  Element inv(Element x) const;
  Element div(Element x, Element y) const;
  // Negative exponents need x != 0. The exponent is reduced mod q - 1.
  Element pow(Element x, std::int64_t e) const;
  // x^(p^times).
  Element frobenius(Element x, std::uint32_t times = 1) const noexcept;

  // Absolute trace onto F_p, returned as an integer in [0, p).
  std::uint32_t trace(Element x) const noexcept;
  // sum_{i < n/g} x^{p^{g i}}; throws kNonDivisorSubfieldDegree unless g | n.
  Element trace_rel(std::uint32_t g, Element x) const;

  bool is_square(Element x) const noexcept;
  std::optional<Element> sqrt(Element x) const;

  // Image of an integer in the prime field.
  Element from_int(std::int64_t v) const noexcept;
  std::vector<std::uint32_t> digits(Element x) const;
  Element from_digits(std::span<const std::uint32_t> digits) const;

  // All elements in increasing rank order.
  std::vector<Element> elements() const;

  // Split-digit addition tables: a rank is hi * lo_order() + lo, and
  // x + y = add_hi(x_hi, y_hi) + add_lo(x_lo, y_lo) where add_hi entries are
  // already scaled by lo_order(). Empty when the field uses XOR (p = 2) or
  // plain modular addition (n = 1).
  Element lo_order() const noexcept;
  Element hi_order() const noexcept;
  std::span<const Element> add_lo_table() const noexcept;
  std::span<const Element> add_hi_table() const noexcept;
  std::span<const Element> neg_lo_table() const noexcept;
  std::span<const Element> neg_hi_table() const noexcept;

  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

  std::shared_ptr<const detail::FieldData> data_;
};

enum class ArithOp { kAdd, kSub, kMul, kInv, kPow, kNeg, kFrobenius };

// Checked dispatcher: validates operand ranks. For kPow the second operand
// is the exponent; for kInv, kNeg and kFrobenius it is ignored.
Element arith(const Field& field, ArithOp op, Element x, std::int64_t y = 0);

// Whether the monic polynomial (constant term first) is irreducible over F_p.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> monic);

// {"p":..,"n":..,"modulus":[...]}
nlohmann::json field_to_json(const Field& field);
Field field_from_json(const nlohmann::json& j);

}  // namespace cdiff
