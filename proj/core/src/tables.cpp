#include "cdiff/tables.hpp"

#include <cstdio>
#include <sstream>
#include <string_view>

#include <nlohmann/json.hpp>

#include "cdiff/error.hpp"
#include "cdiff/function_spec.hpp"

namespace cdiff {

namespace detail {
std::string_view reference_tables_json();
}

const nlohmann::json& reference_tables() {
  static const nlohmann::json data = nlohmann::json::parse(detail::reference_tables_json());
  return data;
}

namespace {

const nlohmann::json& table_entry(int table) {
  for (const auto& t : reference_tables().at("tables")) {
    if (t.at("id").get<int>() == table) return t;
  }
  fail(ErrorCode::kInvalidArgument, "no reference table " + std::to_string(table));
}

}  // namespace

std::vector<TableCell> table_cells(int table) {
  const auto& t = table_entry(table);
  const auto& columns = t.at("columns");
  std::vector<TableCell> out;
  for (const auto& row : t.at("rows")) {
    const auto& values = row.at("values");
    for (std::size_t i = 0; i < columns.size(); ++i) {
      TableCell cell;
      cell.table = table;
      cell.label = columns[i].at("label").get<std::string>();
      cell.function = columns[i].at("function").get<std::string>();
      cell.p = t.at("p").get<std::uint32_t>();
      cell.n = row.at("n").get<std::uint32_t>();
      cell.expected = values.at(i).get<std::uint32_t>();
      cell.provenance = row.at("provenance").get<std::string>() + ", " + cell.label;
      cell.long_run = row.value("long", false);
      out.push_back(std::move(cell));
    }
  }
  return out;
}

TableReproduction reproduce_table(int table, const ReproduceOptions& options) {
  const auto& t = table_entry(table);
  TableReproduction out;
  out.table = table;
  out.c_set = t.at("c_set").get<std::string>();
  const CFilter filter = parse_c_filter(out.c_set);
  bool all_paper = true;
  bool all_nonzero = true;
  bool any = false;
  for (const auto& cell : table_cells(table)) {
    TableCellResult r;
    r.cell = cell;
    const bool skip = (options.max_n != 0 && cell.n > options.max_n) || (cell.long_run && !options.allow_long);
    if (!skip) {
      const Field field = Field::build(cell.p, cell.n);
      const auto f = parse_function(field, cell.function);
      const auto both = spectrum_both(f, filter, options.sweep);
      r.computed = true;
      r.paper_footnote = both.paper_footnote.overall_max;
      r.nonzero_only = both.nonzero_only.overall_max;
      r.match_paper_footnote = r.paper_footnote == cell.expected;
      r.match_nonzero_only = r.nonzero_only == cell.expected;
      all_paper = all_paper && r.match_paper_footnote;
      all_nonzero = all_nonzero && r.match_nonzero_only;
      any = true;
    }
    out.cells.push_back(std::move(r));
  }
  if (any && all_paper) out.matching_conventions.push_back(AConvention::kPaperFootnote);
  if (any && all_nonzero) out.matching_conventions.push_back(AConvention::kNonzeroOnly);
  return out;
}

nlohmann::json to_json(const TableReproduction& rep) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& r : rep.cells) {
    nlohmann::json j{{"n", r.cell.n},
                     {"p", r.cell.p},
                     {"label", r.cell.label},
                     {"function", r.cell.function},
                     {"expected", r.cell.expected},
                     {"provenance", r.cell.provenance},
                     {"computed", r.computed}};
    if (r.computed) {
      j["paper"] = {{"value", r.paper_footnote}, {"match", r.match_paper_footnote}};
      j["nonzero"] = {{"value", r.nonzero_only}, {"match", r.match_nonzero_only}};
    }
    cells.push_back(std::move(j));
  }
  nlohmann::json conventions = nlohmann::json::array();
  for (auto c : rep.matching_conventions) conventions.push_back(to_string(c));
  return {{"table", rep.table}, {"c_set", rep.c_set}, {"matching_conventions", conventions}, {"cells", cells}};
}

std::string format_diff(const TableReproduction& rep) {
  std::ostringstream os;
  char line[200];
  std::snprintf(line, sizeof line, "%4s  %-14s %8s  %-12s %-12s\n", "n", "function", "expected", "paper", "nonzero");
  os << line;
  for (const auto& r : rep.cells) {
    if (!r.computed) {
      std::snprintf(line, sizeof line, "%4u  %-14s %8u  %-12s %-12s\n", r.cell.n, r.cell.label.c_str(), r.cell.expected,
                    "skipped", "skipped");
    } else {
      const std::string a = std::to_string(r.paper_footnote) + (r.match_paper_footnote ? " ok" : " DIFF");
      const std::string b = std::to_string(r.nonzero_only) + (r.match_nonzero_only ? " ok" : " DIFF");
      std::snprintf(line, sizeof line, "%4u  %-14s %8u  %-12s %-12s\n", r.cell.n, r.cell.label.c_str(), r.cell.expected,
                    a.c_str(), b.c_str());
    }
    os << line;
  }
  os << "c-set: " << rep.c_set << "\nmatching a-conventions:";
  if (rep.matching_conventions.empty()) os << " none";
  for (auto c : rep.matching_conventions) os << ' ' << to_string(c);
  os << '\n';
  return os.str();
}

}  // namespace cdiff
