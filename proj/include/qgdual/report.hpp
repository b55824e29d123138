// Structured pass/fail reporting shared by the verification entry points.
//
// Every verifier returns a Report: a list of named checks, each "pass",
// "fail", or "info" (recorded observations that are not gating), with the
// first offending matrix entry attached to failures so a broken identity can
// be located immediately.

#pragma once

#include <qgdual/algebra.hpp>
#include <qgdual/sparse.hpp>

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace qgdual {

struct FirstFailure {
  int row = -1;
  int col = -1;
  std::string value;  // canonical text of the offending entry
};

struct CheckResult {
  std::string name;
  std::string status;  // "pass" | "fail" | "info"
  std::optional<FirstFailure> first_failure;
  std::string note;  // free-form detail (recorded constants, witnesses, ...)
};

struct Report {
  std::string kind;
  std::string algebra;
  int L = 0;
  std::vector<CheckResult> checks;

  [[nodiscard]] bool all_pass() const {
    for (const auto& c : checks)
      if (c.status == "fail") return false;
    return true;
  }

  void add_pass(const std::string& name, const std::string& note = "") {
    checks.push_back({name, "pass", std::nullopt, note});
  }

  void add_info(const std::string& name, const std::string& note) {
    checks.push_back({name, "info", std::nullopt, note});
  }

  void add_fail(const std::string& name, const FirstFailure& ff, const std::string& note = "") {
    checks.push_back({name, "fail", ff, note});
  }

  // Pass iff m == 0; on failure records the first nonzero entry.
  void check_zero(const std::string& name, const LMat& m) {
    int r = 0, c = 0;
    LaurentPoly v;
    if (m.first_nonzero(&r, &c, &v))
      add_fail(name, {r, c, v.str()});
    else
      add_pass(name);
  }

  void check_equal(const std::string& name, const LMat& a, const LMat& b) {
    check_zero(name, a - b);
  }

  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

}  // namespace qgdual
