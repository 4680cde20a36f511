#pragma once

#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "cdiff/differential.hpp"

namespace cdiff {

inline constexpr int kReportSchema = 1;

std::string tool_version();

// UTC ISO-8601; SOURCE_DATE_EPOCH wins over the clock when set.
std::string report_timestamp();

struct ReportEnvelope {
  std::string kind;  // "spectrum", "uniformity", "verdicts", ...
  std::optional<Field> field;
  std::string function;
  std::optional<AConvention> convention;
  nlohmann::json payload;
};

nlohmann::json to_json(const ReportEnvelope& envelope);

nlohmann::json to_json(const Witness& witness);
nlohmann::json to_json(const UniformityResult& result);
nlohmann::json spectrum_payload(const SpectrumReport& report);
// Header comment lines carry the field, function, convention and c-set, then
// c_rank,uniformity,witness_a,witness_b,classification.
std::string spectrum_csv(const SpectrumReport& report);

}  // namespace cdiff
