#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lefcorr {

/// Reports list individual fixed points only when there are at most this
/// many; fixed_point_count is always exact.
inline constexpr std::size_t kMaxListedFixedPoints = 64;

/// Both sides of one verified identity, already rendered as exact scalar
/// strings (or "~"-prefixed floating strings in floating mode).
struct VerificationReport {
  std::string model;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::string global;
  std::string local;
  std::uint64_t fixed_point_count = 0;
  bool match = false;
  std::uint64_t skipped_degenerate = 0;
  std::optional<std::uint64_t> seed;
  std::optional<std::uint64_t> trial;
  std::optional<double> tolerance;
  std::optional<std::string> skipped_reason;
  std::vector<std::string> fixed_points;
  std::vector<std::string> warnings;
};

enum class ReportFormat { kJson, kCsv, kText };

/// Accepts "json", "csv" or "text"; throws ConfigError otherwise.
ReportFormat parse_report_format(std::string_view name);

/// Single-line JSON object (no trailing newline).
std::string report_to_json(const VerificationReport& report);
/// CSV header row matching report_to_csv.
std::string report_csv_header();
/// One CSV row (no trailing newline). Fields containing ',', ';' or quotes
/// are quoted.
std::string report_to_csv(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

std::string emit_report(const VerificationReport& report, ReportFormat format);

}  // namespace lefcorr
