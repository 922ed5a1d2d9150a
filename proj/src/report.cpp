#include "symchar/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "symchar/error.hpp"

namespace symchar {

using Json = nlohmann::ordered_json;

bool RunReport::all_passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const ReportCheck& c) { return c.status == "pass"; });
}

std::string RunReport::to_json() const {
  Json j;
  j["command"] = command;
  j["inputs"] = Json::object();
  for (const auto& [k, v] : inputs) j["inputs"][k] = v;
  j["outputs"] = Json::object();
  for (const auto& [k, v] : outputs) j["outputs"][k] = v;
  if (!element.empty()) {
    Json terms = Json::array();
    for (const auto& [perm, coeff] : element) terms.push_back({perm, coeff});
    j["outputs"]["element"] = std::move(terms);
  }
  j["checks"] = Json::array();
  for (const auto& c : checks) {
    Json entry{{"name", c.name}, {"status", c.status}};
    if (c.counterexample) entry["counterexample"] = *c.counterexample;
    j["checks"].push_back(std::move(entry));
  }
  j["duration_ms"] = duration_ms;
  return j.dump(2);
}

RunReport RunReport::from_json(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON report: ") + e.what(), e.byte);
  }
  RunReport r;
  r.command = j.at("command").get<std::string>();
  for (const auto& [k, v] : j.at("inputs").items()) r.inputs.emplace_back(k, v.get<std::string>());
  for (const auto& [k, v] : j.at("outputs").items()) {
    if (k == "element") {
      for (const auto& term : v) r.element.emplace_back(term.at(0).get<std::string>(), term.at(1).get<std::string>());
    } else {
      r.outputs.emplace_back(k, v.get<std::string>());
    }
  }
  for (const auto& c : j.at("checks")) {
    ReportCheck check{c.at("name").get<std::string>(), c.at("status").get<std::string>(), {}};
    if (c.contains("counterexample")) check.counterexample = c["counterexample"].get<std::string>();
    r.checks.push_back(std::move(check));
  }
  r.duration_ms = j.at("duration_ms").get<double>();
  return r;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "command: " << command << '\n';
  if (!inputs.empty()) {
    out << "inputs:\n";
    for (const auto& [k, v] : inputs) out << "  " << k << " = " << v << '\n';
  }
  if (!outputs.empty() || !element.empty()) {
    out << "outputs:\n";
    for (const auto& [k, v] : outputs) out << "  " << k << " = " << v << '\n';
    if (!element.empty()) {
      out << "  element:\n";
      for (const auto& [perm, coeff] : element) out << "    " << perm << "  " << coeff << '\n';
    }
  }
  if (!checks.empty()) {
    out << "checks:\n";
    for (const auto& c : checks) {
      out << "  [" << c.status << "] " << c.name << '\n';
      if (c.counterexample) out << "    counterexample: " << *c.counterexample << '\n';
    }
  }
  out << "duration_ms: " << duration_ms << '\n';
  return out.str();
}

}  // namespace symchar
