#pragma once

#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dkp/dkp.hpp"
#include "dkpcli/report.hpp"

namespace dkp::cli {

enum ExitCode : int { kExitPass = 0, kExitFail = 1, kExitUsage = 2 };

/// Bad arguments, unreadable input, unwritable output. Maps to exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Names accepted by `build`.
const std::vector<std::string>& builtin_names();
Representation build_named(const std::string& name, std::optional<long> spacetime_dim);

std::vector<Rational> parse_rational_list(const std::string& text);

int cmd_build(const std::string& name, std::optional<long> spacetime_dim, const std::string& out_path,
              std::ostream& out, std::ostream& err);
int cmd_verify(const std::string& file, const std::string& suite, std::ostream& out, std::ostream& err);
int cmd_decompose(const std::string& file, const std::string& out_dir, std::ostream& out, std::ostream& err);
int cmd_equiv(const std::string& file_a, const std::string& file_b, std::ostream& out, std::ostream& err);
int cmd_planewave(const std::string& file, const std::string& p, const std::string& m, std::ostream& out,
                  std::ostream& err);
int cmd_paper(bool as_json, bool corrupt, std::ostream& out, std::ostream& err);

/// Checks for one representation; shared by `verify` and `paper`.
std::vector<ReportCheck> algebra_checks(const Representation& rep);
std::vector<ReportCheck> projector_checks(const Representation& rep);
std::vector<ReportCheck> decomposition_checks(const Representation& rep, const DecompositionResult& result);
std::vector<ReportCheck> planewave_checks(const Representation& rep, const Momentum& p);

/// Every acceptance claim as one check. `corrupt` swaps in a damaged copy of the
/// builtin (1+1) irrep to exercise the failure path.
Report paper_report(bool corrupt);

/// Argument parsing and dispatch; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace dkp::cli
