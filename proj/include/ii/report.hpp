#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ii/batch.hpp"

namespace ii {

struct SuiteResult {
  std::string name;   // stable slug
  std::string title;  // one-line description
  size_t trials = 0;
  size_t failure_count = 0;
  std::vector<Failure> counterexamples;  // capped, deterministic order
  std::string note;                      // witnesses etc.
  double ms = 0;                         // wall time; not part of the canonical JSON

  bool passed() const { return failure_count == 0; }
};

struct RunReport {
  std::string command;
  uint64_t seed = 0;
  std::vector<SuiteResult> suites;

  bool all_passed() const {
    for (const auto& s : suites)
      if (!s.passed()) return false;
    return true;
  }
};

// Canonical machine-readable form: deterministic for fixed inputs and seed
// (timings are text-only for that reason).
std::string report_to_json(const RunReport& r);
std::string report_to_text(const RunReport& r);

} // namespace ii
