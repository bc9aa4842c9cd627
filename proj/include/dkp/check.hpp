#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dkp/matrix.hpp"

namespace dkp {

enum class CheckStatus { pass, fail, vacuous, partial };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::vacuous: return "vacuous";
    case CheckStatus::partial: return "partial";
  }
  return "fail";
}

struct Residual {
  std::string label;
  Matrix value;
};

/// Outcome of a family of exact identities. Only nonzero residuals are kept.
struct CheckReport {
  CheckReport() = default;
  explicit CheckReport(std::string n) : name(std::move(n)) {}

  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::size_t identities_checked = 0;
  std::vector<Residual> failures;
  std::vector<std::string> notes;

  bool passed() const { return status != CheckStatus::fail; }

  bool expect_zero(std::string label, Matrix residual) {
    ++identities_checked;
    if (residual.is_zero()) return true;
    failures.push_back({std::move(label), std::move(residual)});
    status = CheckStatus::fail;
    return false;
  }
  bool expect_equal(std::string label, const Matrix& lhs, const Matrix& rhs) {
    return expect_zero(std::move(label), lhs - rhs);
  }
  void fail(std::string note) {
    notes.push_back(std::move(note));
    status = CheckStatus::fail;
  }
};

}  // namespace dkp
