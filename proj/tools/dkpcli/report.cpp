#include "dkpcli/report.hpp"

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <stdexcept>

namespace dkp::cli {

bool Report::passed() const {
  for (const auto& c : checks)
    if (c.status == CheckStatus::fail) return false;
  return true;
}

json Report::to_json() const {
  json jchecks = json::array();
  for (const auto& c : checks)
    jchecks.push_back({{"name", c.name},
                       {"status", dkp::to_string(c.status)},
                       {"residual_summary", c.residual_summary},
                       {"details", c.details}});
  return {{"schema", kReportSchema},
          {"tool_version", kToolVersion},
          {"command", command},
          {"inputs", inputs},
          {"checks", std::move(jchecks)},
          {"overall", passed() ? "pass" : "fail"}};
}

std::string Report::dump() const { return to_json().dump(2) + "\n"; }

ReportCheck from_check(const CheckReport& check, json details) {
  ReportCheck out;
  out.name = check.name;
  out.status = check.status;
  out.residual_summary = {{"identities_checked", check.identities_checked},
                          {"nonzero_residuals", check.failures.size()}};
  if (!check.notes.empty()) details["notes"] = check.notes;
  if (!check.failures.empty()) {
    json failures = json::array();
    for (const auto& f : check.failures) failures.push_back({{"label", f.label}, {"residual", dkp::to_json(f.value)}});
    details["failures"] = std::move(failures);
  }
  out.details = std::move(details);
  return out;
}

ReportCheck status_check(std::string name, CheckStatus status, json details) {
  ReportCheck out;
  out.name = std::move(name);
  out.status = status;
  out.residual_summary = {{"identities_checked", 0}, {"nonzero_residuals", 0}};
  out.details = std::move(details);
  return out;
}

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
    throw std::runtime_error("sha256 failed");
  std::string hex;
  char buf[3];
  for (unsigned int k = 0; k < len; ++k) {
    std::snprintf(buf, sizeof buf, "%02x", md[k]);
    hex += buf;
  }
  return hex;
}

json input_digest(const std::vector<std::pair<std::string, std::string>>& files, const json& parameters) {
  json jfiles = json::array();
  for (const auto& [path, bytes] : files) jfiles.push_back({{"path", path}, {"sha256", sha256_hex(bytes)}});
  json out{{"files", jfiles}, {"parameters", parameters}};
  out["digest"] = sha256_hex(out.dump());
  return out;
}

}  // namespace dkp::cli
