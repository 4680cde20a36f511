#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "cdiff/differential.hpp"

namespace cdiff {

// Claim identifiers, T0 through T9:
//  T0 c = 1 PN families        T5 ternary family bound
//  T1 trivial PcN functions    T6 x^3 maximum over c
//  T2 x^2 is APcN              T7 inverse, p = 2
//  T3 Gold not PcN, bound      T8 inverse, p odd
//  T4 Coulter-Matthews c = -1  T9 shared solutions
const std::vector<std::string>& claim_ids();

struct ClaimParams {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::optional<std::uint32_t> k;
  std::optional<Element> c;
  std::optional<Element> u;
  std::optional<Element> A;
  std::optional<Element> B;

  friend bool operator==(const ClaimParams&, const ClaimParams&) = default;
};

struct ClaimInstance {
  std::string claim;
  std::string variant;
  ClaimParams params;
  AConvention convention = AConvention::kPaperFootnote;
};

enum class ClaimStatus { kConfirmed, kBoundHolds, kRefuted, kNotApplicable };
std::string_view to_string(ClaimStatus status);

enum class Relation { kEquals, kAtLeast };
std::string_view to_string(Relation relation);

struct ClaimVerdict {
  ClaimInstance instance;
  std::string function;
  Relation relation = Relation::kEquals;
  std::int64_t predicted = 0;
  std::int64_t observed = 0;
  ClaimStatus status = ClaimStatus::kNotApplicable;
  std::optional<Witness> witness;
  std::string note;
};

// Throws kUnknownClaim for an unknown claim or variant.
ClaimVerdict verify(const ClaimInstance& instance);

// Parameter grids: "quick" for smoke runs, "full" for the complete desk-scale
// sweep.
std::vector<ClaimInstance> claim_grid(std::string_view claim, std::string_view preset);

struct ClaimSummaryRow {
  std::string claim;
  std::string variant;
  AConvention convention = AConvention::kPaperFootnote;
  std::size_t confirmed = 0;
  std::size_t bound_holds = 0;
  std::size_t refuted = 0;
  std::size_t not_applicable = 0;
};

struct ClaimSweep {
  std::vector<ClaimVerdict> verdicts;  // grid order
  std::vector<ClaimSummaryRow> summary;
  bool any_refuted() const noexcept;
};

ClaimSweep sweep(const std::vector<ClaimInstance>& instances, const SweepOptions& options = {});
ClaimSweep sweep(std::string_view claim, std::string_view preset, const SweepOptions& options = {});

nlohmann::json to_json(const ClaimVerdict& verdict);
std::string summary_table(const ClaimSweep& sweep);

}  // namespace cdiff
