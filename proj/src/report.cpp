#include "hopfclass/report.hpp"

namespace hopfclass {

bool Report::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

bool Report::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
  return ok;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
}

std::string Report::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return c.name + (c.detail.empty() ? "" : ": " + c.detail);
  return {};
}

nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["title"] = r.title;
  j["status"] = r.passed() ? "pass" : "fail";
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj{{"name", c.name}, {"passed", c.passed}};
    if (!c.detail.empty()) cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  if (!r.data.empty()) j["data"] = r.data;
  return j;
}

std::string to_text(const Report& r) {
  std::string s = r.title + ": " + (r.passed() ? "PASS" : "FAIL") + "\n";
  for (const auto& c : r.checks) {
    s += std::string(c.passed ? "  PASS " : "  FAIL ") + c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += "\n";
  }
  return s;
}

}  // namespace hopfclass
