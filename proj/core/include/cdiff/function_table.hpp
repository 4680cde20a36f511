#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdiff/field.hpp"

namespace cdiff {

// Symbolic provenance of a table. Metadata only; evaluation always goes
// through the tabulated values.
struct Origin {
  enum class Kind { kMonomial, kPolynomial, kInverse, kRaw };

  Kind kind = Kind::kRaw;
  std::uint64_t exponent = 0;                   // kMonomial
  std::map<std::uint64_t, Element> coefficients;  // kPolynomial, exponent -> coefficient

  std::string describe() const;
  friend bool operator==(const Origin&, const Origin&) = default;
};

std::string_view to_string(Origin::Kind kind);

// A function GF(p^n) -> GF(p^n) stored as its full value table.
class FunctionTable {
 public:
  // x^d with 0^d = 0. d = 0 is rejected (kInvalidExponent); larger d is
  // reduced mod q - 1, a zero residue being stored as q - 1.
  static FunctionTable from_monomial(const Field& field, std::uint64_t d);
  // sum a_i x^i with 0^0 = 1 for the constant term. Exponents >= q are
  // evaluated as functions (x^e = x^(e mod (q-1)) off zero). Throws
  // kEmptyPolynomial when every coefficient is zero.
  static FunctionTable from_polynomial(const Field& field, const std::map<std::uint64_t, Element>& coefficients);
  // x^{q-2}, so that 0 maps to 0.
  static FunctionTable inverse(const Field& field);
  // Validates the length (kSchemaViolation) and every rank (kRankOutOfRange).
  static FunctionTable from_values(const Field& field, std::vector<Element> values, Origin origin = {});

  const Field& field() const noexcept { return field_; }
  const Origin& origin() const noexcept { return origin_; }
  std::span<const Element> values() const noexcept { return values_; }
  Element operator()(Element x) const noexcept { return values_[x]; }
  Element q() const noexcept { return field_.q(); }

  bool is_permutation() const;

  friend bool operator==(const FunctionTable& a, const FunctionTable& b) {
    return a.field_ == b.field_ && a.values_ == b.values_;
  }

 private:
  FunctionTable(Field field, std::vector<Element> values, Origin origin)
      : field_(std::move(field)), values_(std::move(values)), origin_(std::move(origin)) {}

  Field field_;
  std::vector<Element> values_;
  Origin origin_;
};

// {"field":{...},"origin":{"kind":...},"values":[...]}
nlohmann::json to_json(const FunctionTable& table);
FunctionTable function_from_json(const nlohmann::json& j);

void save_function(const FunctionTable& table, std::ostream& out);
void save_function(const FunctionTable& table, const std::filesystem::path& path);
FunctionTable load_function(std::istream& in);
FunctionTable load_function(const std::filesystem::path& path);

// Throws kFieldMismatch when the loaded table lives in a different model of
// the field than `expected`.
FunctionTable load_function(const std::filesystem::path& path, const Field& expected);

}  // namespace cdiff
