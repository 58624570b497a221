#include "lefcorr/report.hpp"

#include <sstream>

#include <json.hpp>

#include "lefcorr/errors.hpp"
#include "lefcorr/text_format.hpp"

namespace lefcorr {

namespace {

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",;\"\n") == std::string::npos) return value;
  std::string out = "\"";
  for (char ch : value) {
    if (ch == '"') out += '"';
    out += ch;
  }
  out += '"';
  return out;
}

std::string joined_parameters(const VerificationReport& report) {
  std::string out;
  for (const auto& [key, value] : report.parameters) {
    if (!out.empty()) out += ' ';
    out += key + '=' + value;
  }
  return out;
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::kJson;
  if (name == "csv") return ReportFormat::kCsv;
  if (name == "text") return ReportFormat::kText;
  throw ConfigError("unknown report format '" + std::string(name) + "' (expected json, csv or text)");
}

std::string report_to_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["model"] = report.model;
  j["global"] = report.global;
  j["local"] = report.local;
  j["match"] = report.match;
  j["fixed_point_count"] = report.fixed_point_count;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters) params[key] = value;
  j["parameters"] = std::move(params);
  j["skipped_degenerate"] = report.skipped_degenerate;
  if (report.seed) j["seed"] = *report.seed;
  if (report.trial) j["trial"] = *report.trial;
  if (report.tolerance) j["tolerance"] = *report.tolerance;
  if (report.skipped_reason) j["skipped_reason"] = *report.skipped_reason;
  if (!report.fixed_points.empty()) j["fixed_points"] = report.fixed_points;
  if (!report.warnings.empty()) j["warnings"] = report.warnings;
  return j.dump();
}

std::string report_csv_header() {
  return "model,parameters,global,local,fixed_point_count,match,skipped_degenerate,seed,trial,tolerance";
}

std::string report_to_csv(const VerificationReport& report) {
  std::string out;
  out += csv_field(report.model) + ',';
  out += csv_field(joined_parameters(report)) + ',';
  out += csv_field(report.global) + ',';
  out += csv_field(report.local) + ',';
  out += std::to_string(report.fixed_point_count) + ',';
  out += report.match ? "true," : "false,";
  out += std::to_string(report.skipped_degenerate) + ',';
  out += (report.seed ? std::to_string(*report.seed) : std::string{}) + ',';
  out += (report.trial ? std::to_string(*report.trial) : std::string{}) + ',';
  out += report.tolerance ? format_double(*report.tolerance) : std::string{};
  return out;
}

std::string report_to_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "model:       " << report.model << '\n';
  os << "parameters:  " << joined_parameters(report) << '\n';
  if (report.skipped_reason) os << "skipped:     " << *report.skipped_reason << '\n';
  os << "global:      " << report.global << '\n';
  os << "local:       " << report.local << '\n';
  os << "fixed points: " << report.fixed_point_count << '\n';
  for (const auto& point : report.fixed_points) os << "  " << point << '\n';
  if (report.tolerance) os << "tolerance:   " << format_double(*report.tolerance) << '\n';
  for (const auto& warning : report.warnings) os << "warning:     " << warning << '\n';
  os << "match:       " << (report.match ? "yes" : "NO") << '\n';
  return os.str();
}

std::string emit_report(const VerificationReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::kJson:
      return report_to_json(report);
    case ReportFormat::kCsv:
      return report_csv_header() + '\n' + report_to_csv(report);
    case ReportFormat::kText:
      return report_to_text(report);
  }
  return {};
}

}  // namespace lefcorr
