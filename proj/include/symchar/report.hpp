#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace symchar {

struct ReportCheck {
  std::string name;
  std::string status;  // "pass" or "fail"
  std::optional<std::string> counterexample;

  friend bool operator==(const ReportCheck&, const ReportCheck&) = default;
};

// Result of one CLI command. Values are exact rationals rendered in lowest
// terms; key order is preserved in both renderings.
struct RunReport {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::pair<std::string, std::string>> outputs;
  // Optional dump of a group algebra element as (permutation, coefficient).
  std::vector<std::pair<std::string, std::string>> element;
  std::vector<ReportCheck> checks;
  double duration_ms = 0;

  bool all_passed() const;

  // {command, inputs{...}, outputs{...}, checks[{name, status,
  // counterexample?}], duration_ms}; a dumped element appears as
  // outputs.element = [[permutation, coefficient], ...].
  std::string to_json() const;
  static RunReport from_json(std::string_view text);

  std::string to_text() const;

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

}  // namespace symchar
