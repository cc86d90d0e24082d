#pragma once

#include <chrono>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace genus {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "genus-report/1";

enum class Status { Pass, Fail, Inconclusive, Error };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Inconclusive: return "FAIL-INCONCLUSIVE";
    case Status::Error: return "ERROR";
  }
  return "ERROR";
}

inline Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "FAIL-INCONCLUSIVE") return Status::Inconclusive;
  if (s == "ERROR") return Status::Error;
  throw std::invalid_argument("unknown status '" + s + "'");
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  json details = json::object();
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
};

struct Report {
  std::string scenario;
  json parameters = json::object();
  std::vector<Check> checks;

  Status overall() const { return worst(); }

  bool passed() const { return overall() == Status::Pass; }

  json to_json(bool with_timing = true) const {
    json j;
    j["schema"] = kReportSchema;
    j["scenario"] = scenario;
    j["parameters"] = parameters;
    j["overall"] = to_string(overall());
    j["checks"] = json::array();
    for (const auto& c : checks) {
      json cj{{"name", c.name}, {"status", to_string(c.status)}, {"details", c.details}};
      if (with_timing) cj["elapsed_ms"] = c.elapsed_ms;
      j["checks"].push_back(std::move(cj));
    }
    return j;
  }

  static Report from_json(const json& j) {
    if (j.at("schema") != kReportSchema) throw std::invalid_argument("unsupported report schema");
    Report r;
    r.scenario = j.at("scenario").get<std::string>();
    r.parameters = j.at("parameters");
    for (const auto& cj : j.at("checks")) {
      Check c;
      c.name = cj.at("name").get<std::string>();
      c.status = status_from_string(cj.at("status").get<std::string>());
      c.details = cj.at("details");
      c.elapsed_ms = cj.value("elapsed_ms", std::int64_t{0});
      r.checks.push_back(std::move(c));
    }
    return r;
  }

  // Canonical text: sorted keys (nlohmann objects are ordered maps), two-space
  // indent, trailing newline.
  std::string canonical(bool with_timing = true) const { return to_json(with_timing).dump(2) + "\n"; }

private:
  // ERROR dominates FAIL, FAIL dominates FAIL-INCONCLUSIVE.
  Status worst() const {
    Status w = Status::Pass;
    auto rank = [](Status s) {
      switch (s) {
        case Status::Pass: return 0;
        case Status::Inconclusive: return 1;
        case Status::Fail: return 2;
        case Status::Error: return 3;
      }
      return 3;
    };
    for (const auto& c : checks) {
      if (rank(c.status) > rank(w)) w = c.status;
    }
    return w;
  }
};

// Process exit code for an overall status: 0 PASS, 1 FAIL/ERROR, 3 budget.
inline int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::Inconclusive: return 3;
    default: return 1;
  }
}

inline void emit_report(const Report& r, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << r.canonical();
  if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

// Runs `body` (which fills name/status/details) and records wall time.
template <class F>
Check timed_check(std::string name, F&& body) {
  Check c;
  c.name = std::move(name);
  auto start = std::chrono::steady_clock::now();
  body(c);
  c.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - start)
                     .count();
  return c;
}

}  // namespace genus
