#include "albertine/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace alb {

void Report::add(const std::string& name, const std::string& ref, bool pass,
                 const std::string& detail) {
  checks.push_back({name, ref, pass ? "pass" : "fail", detail});
}

void Report::skip(const std::string& name, const std::string& ref,
                  const std::string& detail) {
  checks.push_back({name, ref, "skip", detail});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

bool Report::all_pass() const { return failures() == 0; }

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& c : checks)
    if (c.status == "fail") ++n;
  return n;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["version"] = version;
  j["command"] = command;
  j["elapsed_ms"] = elapsed_ms;
  j["checks"] = nlohmann::json::array();
  for (const auto& c : checks)
    j["checks"].push_back({{"name", c.name},
                           {"paper_ref", c.paper_ref},
                           {"status", c.status},
                           {"detail", c.detail}});
  return j.dump(2);
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    os << (c.status == "pass" ? "[pass] " : c.status == "skip" ? "[skip] "
                                                               : "[FAIL] ")
       << c.name;
    if (!c.detail.empty()) os << "  (" << c.detail << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace alb
