#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdiff/differential.hpp"

namespace cdiff {

// The embedded expectation file (core/data/reference_tables.json).
const nlohmann::json& reference_tables();

struct TableCell {
  int table = 0;
  std::string label;
  std::string function;  // function spec, see parse_function
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint32_t expected = 0;
  std::string provenance;
  bool long_run = false;
};

std::vector<TableCell> table_cells(int table);

struct TableCellResult {
  TableCell cell;
  bool computed = false;  // false when skipped by --max-n or the long-run gate
  std::uint32_t paper_footnote = 0;
  std::uint32_t nonzero_only = 0;
  bool match_paper_footnote = false;
  bool match_nonzero_only = false;
};

struct TableReproduction {
  int table = 0;
  std::string c_set;
  std::vector<TableCellResult> cells;
  // Conventions under which every computed cell matches.
  std::vector<AConvention> matching_conventions;
};

struct ReproduceOptions {
  std::uint32_t max_n = 0;  // 0 = no limit
  bool allow_long = false;
  SweepOptions sweep;
};

TableReproduction reproduce_table(int table, const ReproduceOptions& options = {});

nlohmann::json to_json(const TableReproduction& reproduction);
// Side-by-side text: n, function, expected, both computed values, match flags.
std::string format_diff(const TableReproduction& reproduction);

}  // namespace cdiff
