#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dkp/check.hpp"
#include "dkp/serialization.hpp"

namespace dkp::cli {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kReportSchema = "dkp-report/1";

struct ReportCheck {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  json residual_summary = json::object();
  json details = json::object();
};

/// Keys are emitted in sorted order and rationals as canonical strings, so the
/// same inputs always produce the same bytes.
struct Report {
  Report() = default;
  explicit Report(std::string cmd) : command(std::move(cmd)) {}

  std::string command;
  json inputs = json::object();
  std::vector<ReportCheck> checks;

  bool passed() const;
  json to_json() const;
  std::string dump() const;
};

ReportCheck from_check(const CheckReport& check, json details = json::object());
ReportCheck status_check(std::string name, CheckStatus status, json details = json::object());

std::string sha256_hex(std::string_view data);

/// {"parameters": ..., "files": [{"path", "sha256"}], "digest": sha256 over both}
json input_digest(const std::vector<std::pair<std::string, std::string>>& files, const json& parameters);

}  // namespace dkp::cli
