#include "ii/report.hpp"

#include <sstream>

#include <json.hpp>

namespace ii {

using nlohmann::json;

std::string report_to_json(const RunReport& r) {
  json suites = json::array();
  for (const auto& s : r.suites) {
    json failures = json::array();
    for (const auto& f : s.counterexamples) {
      failures.push_back(json{{"index", f.index},
                              {"anchor", f.anchor},
                              {"message", f.message},
                              {"counterexample", f.payload}});
    }
    json js{{"name", s.name},
            {"title", s.title},
            {"trials", s.trials},
            {"failures", s.failure_count},
            {"passed", s.passed()},
            {"findings", std::move(failures)}};
    if (!s.note.empty()) js["note"] = s.note;
    suites.push_back(std::move(js));
  }
  json j{{"schema", "initial-integrals-report/1"},
         {"command", r.command},
         {"seed", r.seed},
         {"passed", r.all_passed()},
         {"suites", std::move(suites)}};
  return j.dump(2);
}

std::string report_to_text(const RunReport& r) {
  std::ostringstream os;
  for (const auto& s : r.suites) {
    os << (s.passed() ? "PASS" : "FAIL") << "  " << s.name << "  (" << s.trials << " trials, "
       << s.failure_count << " failures, " << static_cast<long long>(s.ms) << " ms)";
    if (!s.note.empty()) os << "  " << s.note;
    os << "\n";
    for (const auto& f : s.counterexamples)
      os << "      [" << f.anchor << "] trial " << f.index << ": " << f.message
         << (f.payload.empty() ? "" : "  " + f.payload) << "\n";
  }
  os << (r.all_passed() ? "ALL SUITES PASSED" : "SUITE FAILURES PRESENT") << "\n";
  return os.str();
}

} // namespace ii
