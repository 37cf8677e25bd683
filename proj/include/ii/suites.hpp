#pragma once

#include "ii/report.hpp"

namespace ii {

struct SuiteConfig {
  uint64_t seed = 42;
  bool parallel = true;
  // Stated trial counts are divided by this (floor 1); the acceptance run
  // uses 1, smoke/bench runs use larger divisors.
  size_t divisor = 1;

  size_t n(size_t base) const { return base / divisor ? base / divisor : 1; }
};

// The acceptance battery: every suite checks one headline property chain at
// its stated tolerance and trial count.
SuiteResult suite_integration_agreement(const SuiteConfig& cfg);
SuiteResult suite_functional_equation(const SuiteConfig& cfg);
SuiteResult suite_juxtaposition_isometry(const SuiteConfig& cfg);
SuiteResult suite_indefinite_two_path(const SuiteConfig& cfg);
SuiteResult suite_holder_pairing(const SuiteConfig& cfg);
SuiteResult suite_power_mean_monotonicity(const SuiteConfig& cfg);
SuiteResult suite_cantor_density(const SuiteConfig& cfg);
SuiteResult suite_sequence_universality(const SuiteConfig& cfg);
SuiteResult suite_measure_universal_map(const SuiteConfig& cfg);
SuiteResult suite_measure_integration_density(const SuiteConfig& cfg);
SuiteResult suite_hilbert_orthogonality(const SuiteConfig& cfg);
SuiteResult suite_negative_controls(const SuiteConfig& cfg);

// Module-level invariant batteries aggregated by the verify-all command.
SuiteResult suite_dyadic_invariants(const SuiteConfig& cfg);
SuiteResult suite_universal_invariants(const SuiteConfig& cfg);
SuiteResult suite_instances_invariants(const SuiteConfig& cfg);
SuiteResult suite_sequences_invariants(const SuiteConfig& cfg);
SuiteResult suite_measures_invariants(const SuiteConfig& cfg);
SuiteResult suite_serialization_roundtrip(const SuiteConfig& cfg);

std::vector<SuiteResult> run_acceptance_suites(const SuiteConfig& cfg);
std::vector<SuiteResult> run_all_suites(const SuiteConfig& cfg);

} // namespace ii
