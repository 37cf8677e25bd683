#pragma once

#include <chrono>
#include <string>

#include "ii/dyadic.hpp"
#include "ii/suites.hpp"

namespace ii::detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
  }
};

inline void absorb(SuiteResult& r, const BatchResult& b) {
  r.trials += b.trials;
  r.failure_count += b.failure_count;
  for (const auto& f : b.failures)
    if (r.counterexamples.size() < 8) r.counterexamples.push_back(f);
}

inline void add_failure(SuiteResult& r, std::string anchor, std::string message,
                        std::string payload = "") {
  ++r.failure_count;
  if (r.counterexamples.size() < 8) {
    Failure f;
    f.anchor = std::move(anchor);
    f.message = std::move(message);
    f.payload = std::move(payload);
    r.counterexamples.push_back(std::move(f));
  }
}

inline Failure make_failure(std::string anchor, std::string message, std::string payload = "") {
  Failure f;
  f.anchor = std::move(anchor);
  f.message = std::move(message);
  f.payload = std::move(payload);
  return f;
}

inline BatchOptions batch_opt(const SuiteConfig& cfg) {
  BatchOptions b;
  b.parallel = cfg.parallel;
  return b;
}

inline bool norms_agree(const PNormValue& a, const PNormValue& b, double rel) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  if (a.exact_pow && b.exact_pow) return *a.exact_pow == *b.exact_pow;
  return close_rel(a.value, b.value, rel);
}

inline DyadicStep basis_step(int lvl, size_t j) {
  std::vector<Scalar> cs(size_t{1} << lvl);
  cs[j] = Scalar(1);
  return DyadicStep(lvl, std::move(cs));
}

} // namespace ii::detail
