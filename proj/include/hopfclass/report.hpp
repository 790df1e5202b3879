#pragma once

// Verification reports: named pass/fail checks plus measured data.

#include <json.hpp>

#include <string>
#include <vector>

namespace hopfclass {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<Check> checks;
  nlohmann::ordered_json data = nlohmann::ordered_json::object();

  [[nodiscard]] bool passed() const;
  /// Records a check and returns `ok` so callers can chain early exits.
  bool add(std::string name, bool ok, std::string detail = {});
  /// Appends the checks of `other`, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {});
  /// Name of the first failing check, or empty.
  [[nodiscard]] std::string first_failure() const;
};

nlohmann::ordered_json to_json(const Report& r);
/// One line per check: "PASS name" / "FAIL name: detail".
std::string to_text(const Report& r);

}  // namespace hopfclass
