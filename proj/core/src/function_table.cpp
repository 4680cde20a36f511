#include "cdiff/function_table.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cdiff/error.hpp"

namespace cdiff {

std::string_view to_string(Origin::Kind kind) {
  switch (kind) {
    case Origin::Kind::kMonomial: return "monomial";
    case Origin::Kind::kPolynomial: return "polynomial";
    case Origin::Kind::kInverse: return "inverse";
    case Origin::Kind::kRaw: return "raw";
  }
  return "raw";
}

std::string Origin::describe() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::kMonomial:
      os << "x^" << exponent;
      break;
    case Kind::kPolynomial: {
      bool first = true;
      for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << "[" << it->second << "]x^" << it->first;
      }
      break;
    }
    case Kind::kInverse:
      os << "x^(q-2)";
      break;
    case Kind::kRaw:
      os << "raw table";
      break;
  }
  return os.str();
}

FunctionTable FunctionTable::from_monomial(const Field& field, std::uint64_t d) {
  if (d == 0) fail(ErrorCode::kInvalidExponent, "exponent 0 is rejected (0^0 is ambiguous)");
  const std::uint64_t order = field.q() - 1;
  std::uint64_t reduced = d % order;
  if (reduced == 0) reduced = order;
  std::vector<Element> values(field.q());
  values[0] = 0;
  for (Element x = 1; x < field.q(); ++x) values[x] = field.pow(x, static_cast<std::int64_t>(reduced));
  Origin origin;
  origin.kind = Origin::Kind::kMonomial;
  origin.exponent = reduced;
  return FunctionTable(field, std::move(values), std::move(origin));
}

FunctionTable FunctionTable::from_polynomial(const Field& field,
                                             const std::map<std::uint64_t, Element>& coefficients) {
  bool any_nonzero = false;
  for (const auto& [e, a] : coefficients) {
    field.check(a);
    any_nonzero = any_nonzero || a != 0;
  }
  if (!any_nonzero) fail(ErrorCode::kEmptyPolynomial, "polynomial has no nonzero coefficient");

  std::vector<Element> values(field.q(), 0);
  for (Element x = 0; x < field.q(); ++x) {
    Element acc = 0;
    for (const auto& [e, a] : coefficients) {
      if (a == 0) continue;
      const Element term = e == 0 ? a : field.mul(a, field.pow(x, static_cast<std::int64_t>(e)));
      acc = field.add(acc, term);
    }
    values[x] = acc;
  }
  Origin origin;
  origin.kind = Origin::Kind::kPolynomial;
  for (const auto& [e, a] : coefficients) {
    if (a != 0) origin.coefficients.emplace(e, a);
  }
  return FunctionTable(field, std::move(values), std::move(origin));
}

FunctionTable FunctionTable::inverse(const Field& field) {
  std::vector<Element> values(field.q(), 0);
  for (Element x = 1; x < field.q(); ++x) values[x] = field.inv(x);
  Origin origin;
  origin.kind = Origin::Kind::kInverse;
  return FunctionTable(field, std::move(values), std::move(origin));
}

FunctionTable FunctionTable::from_values(const Field& field, std::vector<Element> values, Origin origin) {
  if (values.size() != field.q()) {
    fail(ErrorCode::kSchemaViolation,
         "expected " + std::to_string(field.q()) + " values, got " + std::to_string(values.size()));
  }
  for (auto v : values) field.check(v);
  return FunctionTable(field, std::move(values), std::move(origin));
}

bool FunctionTable::is_permutation() const {
  std::vector<bool> seen(q(), false);
  for (auto v : values_) {
    if (seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

nlohmann::json to_json(const FunctionTable& table) {
  const Origin& o = table.origin();
  nlohmann::json origin{{"kind", std::string(to_string(o.kind))}};
  if (o.kind == Origin::Kind::kMonomial) origin["exponent"] = o.exponent;
  if (o.kind == Origin::Kind::kPolynomial) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [e, a] : o.coefficients) terms.push_back({{"exponent", e}, {"coefficient", a}});
    origin["terms"] = terms;
  }
  return nlohmann::json{{"field", field_to_json(table.field())},
                        {"origin", origin},
                        {"values", std::vector<Element>(table.values().begin(), table.values().end())}};
}

FunctionTable function_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("field") || !j.contains("values") || !j.at("values").is_array()) {
    fail(ErrorCode::kSchemaViolation, "function file needs 'field' and 'values'");
  }
  const Field field = field_from_json(j.at("field"));
  std::vector<Element> values;
  values.reserve(j.at("values").size());
  for (const auto& v : j.at("values")) {
    if (!v.is_number_integer()) fail(ErrorCode::kSchemaViolation, "values must be integers");
    const auto r = v.get<std::int64_t>();
    if (r < 0 || static_cast<std::uint64_t>(r) >= field.q()) {
      fail(ErrorCode::kRankOutOfRange, "value " + std::to_string(r) + " is not a rank of " + field.describe());
    }
    values.push_back(static_cast<Element>(r));
  }
  if (values.size() != field.q()) {
    fail(ErrorCode::kSchemaViolation,
         "expected " + std::to_string(field.q()) + " values, got " + std::to_string(values.size()));
  }

  Origin origin;
  if (j.contains("origin")) {
    const auto& o = j.at("origin");
    if (!o.is_object() || !o.contains("kind") || !o.at("kind").is_string()) {
      fail(ErrorCode::kSchemaViolation, "origin needs a 'kind' string");
    }
    const auto kind = o.at("kind").get<std::string>();
    if (kind == "monomial") {
      origin.kind = Origin::Kind::kMonomial;
      if (!o.contains("exponent") || !o.at("exponent").is_number_unsigned()) {
        fail(ErrorCode::kSchemaViolation, "monomial origin needs an exponent");
      }
      origin.exponent = o.at("exponent").get<std::uint64_t>();
    } else if (kind == "polynomial") {
      origin.kind = Origin::Kind::kPolynomial;
      if (o.contains("terms")) {
        for (const auto& t : o.at("terms")) {
          origin.coefficients.emplace(t.at("exponent").get<std::uint64_t>(), t.at("coefficient").get<Element>());
        }
      }
    } else if (kind == "inverse") {
      origin.kind = Origin::Kind::kInverse;
    } else if (kind == "raw") {
      origin.kind = Origin::Kind::kRaw;
    } else {
      fail(ErrorCode::kSchemaViolation, "unknown origin kind '" + kind + "'");
    }
  }
  return FunctionTable::from_values(field, std::move(values), std::move(origin));
}

void save_function(const FunctionTable& table, std::ostream& out) { out << to_json(table).dump() << '\n'; }

void save_function(const FunctionTable& table, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) fail(ErrorCode::kIo, "cannot write " + path.string());
  save_function(table, out);
}

FunctionTable load_function(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::kSchemaViolation, std::string("malformed JSON: ") + e.what());
  }
  return function_from_json(j);
}

FunctionTable load_function(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot read " + path.string());
  return load_function(in);
}

FunctionTable load_function(const std::filesystem::path& path, const Field& expected) {
  FunctionTable t = load_function(path);
  if (!(t.field() == expected)) {
    fail(ErrorCode::kFieldMismatch, "table is over " + t.field().describe() + ", expected " + expected.describe());
  }
  return t;
}

}  // namespace cdiff
