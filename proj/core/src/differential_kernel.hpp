#pragma once

#include <cstdint>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/function_table.hpp"

namespace cdiff::detail {

struct RowBest {
  std::uint32_t value = 0;
  Element a = 0;
  Element b = 0;
};

// Best (a, b) for one c, with the a = 0 row kept apart from the rest so a
// single pass answers both a-conventions.
struct CScan {
  RowBest zero_row;
  RowBest nonzero_rows;
};

// Streams the rows of the c-differential table of one function. Holds the
// precomputed split-digit views of F; scan() is const and thread-safe given a
// per-thread histogram of size q.
class DifferentialKernel {
 public:
  explicit DifferentialKernel(const FunctionTable& f, bool force_generic = false);

  CScan scan(Element c, std::vector<std::uint32_t>& hist) const;

  const FunctionTable& function() const noexcept { return *f_; }

  enum class Mode { kXor, kPrime, kSplit, kGeneric };
  Mode mode() const noexcept { return mode_; }

 private:
  const FunctionTable* f_;
  Mode mode_;
  std::vector<Element> f_hi_;  // (F(y) / lo) * hi, row offset into add_hi
  std::vector<Element> f_lo_;  // (F(y) % lo) * lo, row offset into add_lo
};

}  // namespace cdiff::detail
