#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "iqg/relcheck.hpp"

namespace iqg {

inline constexpr const char* kConfigSchema = "iqgklo.config/1";
inline constexpr const char* kReportSchema = "iqgklo.report/1";

struct RunConfig {
  std::vector<ShiftInstance> instances;
  CheckOptions options;
  bool identities = true;     // also run the standalone identity suite
  bool structured = false;    // JSON report instead of text
};

// A catalog name, "all", or an inline instance object.
std::vector<ShiftInstance> parse_instances(const nlohmann::json& j);
ShiftInstance parse_instance_object(const nlohmann::json& j);
// Comma-separated kind names, e.g. "BB3,Serre3".
std::vector<RelKind> parse_relations(const std::string& csv);
BB1Convention parse_bb1(const std::string& s);

// Throws ParseError on malformed input and ValidationError (or a satake
// error) on an inconsistent instance or filter.
RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config_text(const std::string& text);
RunConfig load_config(const std::string& path);
// Every filtered kind must occur for every selected instance.
void validate_filter(const RunConfig& cfg);

struct RunResult {
  std::vector<CheckReport> reports;
  bool all_pass() const;
};

RunResult run_report(const RunConfig& cfg);

nlohmann::json to_json(const CheckEntry& e);
nlohmann::json to_json(const CheckReport& r);
nlohmann::json report_json(const RunResult& res, const RunConfig& cfg);
std::string report_text(const RunResult& res);

nlohmann::json instance_json(const ShiftInstance& inst);

}  // namespace iqg
