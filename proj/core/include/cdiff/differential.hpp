#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cdiff/field.hpp"
#include "cdiff/function_table.hpp"

namespace cdiff {

// Which shifts a enter the uniformity maximum.
//  kPaperFootnote: every a when c != 1, nonzero a when c = 1.
//  kNonzeroOnly:   nonzero a for every c.
enum class AConvention { kPaperFootnote, kNonzeroOnly };

std::string_view to_string(AConvention conv);  // "paper" / "nonzero"
AConvention parse_convention(std::string_view text);

// Whether shift a is admissible for multiplier c under the convention.
inline bool admissible(AConvention conv, Element c, Element a) {
  return a != 0 || (conv == AConvention::kPaperFootnote && c != 1);
}

enum class Classification { kPcN, kAPcN, kHigher };
std::string_view to_string(Classification cls);
Classification classify(std::uint32_t uniformity);

struct Witness {
  Element a = 0;
  Element b = 0;
  std::vector<Element> solutions;  // every x with F(x+a) - cF(x) = b, ascending
};

struct UniformityResult {
  Element c = 0;
  std::uint32_t value = 0;
  Witness witness;
  Classification classification = Classification::kHigher;
};

// x -> F(x + a) - c F(x), with a raw origin.
FunctionTable c_derivative(const FunctionTable& f, Element c, Element a);

// Dense q x q count matrix: entry (a, b) = #{x : F(x+a) - cF(x) = b}.
class DdtMatrix {
 public:
  static constexpr Element kMaxDenseOrder = 4096;

  DdtMatrix(Element q, std::vector<std::uint32_t> counts) : q_(q), counts_(std::move(counts)) {}

  Element q() const noexcept { return q_; }
  std::uint32_t at(Element a, Element b) const noexcept { return counts_[std::size_t{a} * q_ + b]; }
  std::span<const std::uint32_t> row(Element a) const noexcept {
    return std::span<const std::uint32_t>(counts_).subspan(std::size_t{a} * q_, q_);
  }

 private:
  Element q_;
  std::vector<std::uint32_t> counts_;
};

// Throws kSizeGuardExceeded above DdtMatrix::kMaxDenseOrder.
DdtMatrix ddt(const FunctionTable& f, Element c);

// Maximum count over admissible (a, b). The witness is the lexicographically
// smallest (a, b) attaining it. Runs in O(q^2) memory-free streaming form.
UniformityResult uniformity(const FunctionTable& f, Element c, AConvention conv);

// Solutions of F(x+a) - cF(x) = b, ascending.
std::vector<Element> solutions(const FunctionTable& f, Element c, Element a, Element b);

struct CFilter {
  enum class Kind { kAll, kNonzero, kExclude01, kList };
  Kind kind = Kind::kAll;
  std::vector<Element> list;

  static CFilter all() { return {Kind::kAll, {}}; }
  static CFilter nonzero() { return {Kind::kNonzero, {}}; }
  static CFilter exclude_0_1() { return {Kind::kExclude01, {}}; }
  static CFilter explicit_list(std::vector<Element> cs) { return {Kind::kList, std::move(cs)}; }

  // Ascending, deduplicated c ranks selected in the field.
  std::vector<Element> select(const Field& field) const;
  std::string describe() const;  // "all" | "nonzero" | "no01" | "list:1,2"
};

CFilter parse_c_filter(std::string_view text);

struct SweepOptions {
  unsigned threads = 0;  // 0 = hardware concurrency
};

struct SpectrumReport {
  Field field;
  Origin origin;
  AConvention convention = AConvention::kPaperFootnote;
  CFilter filter;
  std::vector<UniformityResult> results;  // ascending c
  std::uint32_t overall_max = 0;
  // Smallest c attaining overall_max.
  std::optional<Element> argmax_c;
};

SpectrumReport spectrum(const FunctionTable& f, const CFilter& filter, AConvention conv,
                        const SweepOptions& options = {});

// One pass over the data yields the report for both conventions: the a = 0
// row is tracked separately from the nonzero rows.
struct DualSpectrum {
  SpectrumReport paper_footnote;
  SpectrumReport nonzero_only;
};
DualSpectrum spectrum_both(const FunctionTable& f, const CFilter& filter, const SweepOptions& options = {});

struct CrossSolutionEntry {
  Element x0 = 0;
  bool predicted = false;  // F(x0) == (b1 - b2) / (c2 - c1)
  bool actual = false;     // x0 solves the c2 equation with b2
};

// For every solution x0 of F(x+a) - c1 F(x) = b1, compares membership in the
// c2 / b2 solution set with the shared-solution criterion. Throws
// kDegenerateCs when c1 = c2 or either c is zero.
std::vector<CrossSolutionEntry> cross_solution_check(const FunctionTable& f, Element a, Element b1, Element b2,
                                                     Element c1, Element c2);

}  // namespace cdiff
