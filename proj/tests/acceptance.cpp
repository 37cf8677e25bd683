// Acceptance battery: one pass/fail line per criterion, nonzero exit on any
// failure. --trials-divisor N scales the stated counts down for quick runs.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ii/config.hpp"
#include "ii/suites.hpp"

int main(int argc, char** argv) {
  ii::SuiteConfig cfg;
  cfg.seed = 42;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--trials-divisor") == 0 && i + 1 < argc)
      cfg.divisor = static_cast<size_t>(std::atoll(argv[++i]));
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      cfg.seed = static_cast<uint64_t>(std::atoll(argv[++i]));
    if (std::strcmp(argv[i], "--serial") == 0) cfg.parallel = false;
  }
  ii::set_field_mode(ii::Field::real);

  std::vector<ii::SuiteResult> results = ii::run_acceptance_suites(cfg);
  int criterion = 0;
  bool ok = true;
  for (const auto& r : results) {
    ++criterion;
    std::printf("criterion %2d [%s] %-28s  %zu trials, %zu failures, %lld ms\n", criterion,
                r.passed() ? "PASS" : "FAIL", r.name.c_str(), r.trials, r.failure_count,
                static_cast<long long>(r.ms));
    if (!r.note.empty()) std::printf("              note: %s\n", r.note.c_str());
    for (const auto& f : r.counterexamples)
      std::printf("              [%s] trial %zu: %s %s\n", f.anchor.c_str(), f.index,
                  f.message.c_str(), f.payload.c_str());
    ok = ok && r.passed();
  }
  std::printf("%s\n", ok ? "ACCEPTANCE: ALL CRITERIA PASSED" : "ACCEPTANCE: FAILURES PRESENT");
  return ok ? 0 : 1;
}
