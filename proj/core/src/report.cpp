#include "cdiff/report.hpp"

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <sstream>

namespace cdiff {

std::string tool_version() { return CDIFF_VERSION; }

std::string report_timestamp() {
  std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH"); epoch != nullptr && *epoch != '\0') {
    t = static_cast<std::time_t>(std::strtoll(epoch, nullptr, 10));
  }
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

nlohmann::json to_json(const ReportEnvelope& env) {
  nlohmann::json j{{"tool", "cdiff"}, {"version", tool_version()}, {"schema", kReportSchema},
                   {"kind", env.kind}, {"timestamp", report_timestamp()}};
  if (env.field) j["field"] = field_to_json(*env.field);
  if (!env.function.empty()) j["function"] = env.function;
  if (env.convention) j["convention"] = to_string(*env.convention);
  j["payload"] = env.payload;
  return j;
}

nlohmann::json to_json(const Witness& w) { return {{"a", w.a}, {"b", w.b}, {"solutions", w.solutions}}; }

nlohmann::json to_json(const UniformityResult& r) {
  return {{"c", r.c}, {"uniformity", r.value}, {"witness", to_json(r.witness)},
          {"classification", to_string(r.classification)}};
}

nlohmann::json spectrum_payload(const SpectrumReport& report) {
  nlohmann::json results = nlohmann::json::array();
  for (const auto& r : report.results) results.push_back(to_json(r));
  nlohmann::json j{{"c_set", report.filter.describe()},
                   {"convention", to_string(report.convention)},
                   {"overall_max", report.overall_max},
                   {"results", std::move(results)}};
  j["argmax_c"] = report.argmax_c ? nlohmann::json(*report.argmax_c) : nlohmann::json(nullptr);
  return j;
}

std::string spectrum_csv(const SpectrumReport& report) {
  std::ostringstream os;
  os << "# field " << field_to_json(report.field).dump() << '\n';
  os << "# function " << report.origin.describe() << '\n';
  os << "# convention " << to_string(report.convention) << '\n';
  os << "# c_set " << report.filter.describe() << '\n';
  os << "# overall_max " << report.overall_max << '\n';
  os << "c_rank,uniformity,witness_a,witness_b,classification\n";
  for (const auto& r : report.results) {
    os << r.c << ',' << r.value << ',' << r.witness.a << ',' << r.witness.b << ',' << to_string(r.classification) << '\n';
  }
  return os.str();
}

}  // namespace cdiff
