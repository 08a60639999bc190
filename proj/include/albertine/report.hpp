#pragma once

#include <string>
#include <vector>

namespace alb {

struct CheckResult {
  std::string name;
  std::string paper_ref;  // stable anchor id of the checked fact
  std::string status;     // pass | fail | skip
  std::string detail;
};

/** Machine-readable verification outcome shared by library and CLI. */
struct Report {
  std::string version = "1.0.0";
  std::string command;
  std::vector<CheckResult> checks;
  long long elapsed_ms = 0;

  void add(const std::string& name, const std::string& ref, bool pass,
           const std::string& detail = "");
  void skip(const std::string& name, const std::string& ref,
            const std::string& detail = "");
  void merge(const Report& other);
  bool all_pass() const;
  std::size_t failures() const;
  std::string to_json() const;
  /** One line per check, human readable. */
  std::string to_text() const;
};

}  // namespace alb
