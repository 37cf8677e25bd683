// Compares the OpenMP batch path against the serial reference on the heavy
// verification suites and checks that both produce identical outcomes.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#include "ii/config.hpp"
#include "ii/suites.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

bool same_outcome(const ii::SuiteResult& a, const ii::SuiteResult& b) {
  if (a.trials != b.trials || a.failure_count != b.failure_count) return false;
  if (a.counterexamples.size() != b.counterexamples.size()) return false;
  for (size_t i = 0; i < a.counterexamples.size(); ++i)
    if (!(a.counterexamples[i] == b.counterexamples[i])) return false;
  return true;
}

} // namespace

int main(int argc, char** argv) {
  ii::SuiteConfig cfg;
  cfg.seed = 42;
  cfg.divisor = 10;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--trials-divisor") == 0 && i + 1 < argc)
      cfg.divisor = static_cast<size_t>(std::atoll(argv[++i]));
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc)
      cfg.seed = static_cast<uint64_t>(std::atoll(argv[++i]));
  }
  ii::set_field_mode(ii::Field::real);

#ifdef _OPENMP
  std::printf("OpenMP: %d threads\n", omp_get_max_threads());
#else
  std::printf("OpenMP: not available; both columns run serial\n");
#endif
  std::printf("trials divisor: %zu\n\n", cfg.divisor);
  std::printf("%-28s %12s %12s %9s  %s\n", "suite", "serial ms", "parallel ms", "speedup",
              "identical");

  using SuiteFn = ii::SuiteResult (*)(const ii::SuiteConfig&);
  const SuiteFn suites[] = {&ii::suite_integration_agreement, &ii::suite_juxtaposition_isometry,
                            &ii::suite_sequence_universality, &ii::suite_measure_universal_map};

  bool ok = true;
  for (SuiteFn fn : suites) {
    ii::SuiteConfig serial_cfg = cfg;
    serial_cfg.parallel = false;
    ii::SuiteResult serial = fn(serial_cfg);
    ii::SuiteConfig parallel_cfg = cfg;
    parallel_cfg.parallel = true;
    ii::SuiteResult parallel = fn(parallel_cfg);
    bool identical = same_outcome(serial, parallel);
    ok = ok && identical && serial.passed() && parallel.passed();
    std::printf("%-28s %12.1f %12.1f %8.2fx  %s\n", serial.name.c_str(), serial.ms, parallel.ms,
                parallel.ms > 0 ? serial.ms / parallel.ms : 0.0, identical ? "yes" : "NO");
  }
  std::printf("\n%s\n", ok ? "bench: outcomes identical, suites green"
                           : "bench: MISMATCH OR FAILURE");
  return ok ? 0 : 1;
}
