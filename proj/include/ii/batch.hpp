#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ii/random.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ii {

struct Failure {
  size_t index = 0;
  std::string anchor;   // slug of the violated property
  std::string message;  // human-readable account
  std::string payload;  // shrunk counterexample, JSON when available

  friend bool operator==(const Failure&, const Failure&) = default;
};

struct BatchResult {
  size_t trials = 0;
  size_t failure_count = 0;
  std::vector<Failure> failures;  // capped, sorted by trial index

  bool passed() const { return failure_count == 0; }
};

struct BatchOptions {
  bool parallel = true;
  size_t max_kept_failures = 5;
};

// Runs `body(i, rng)` for i in [0, n), where rng is derived from (seed, i).
// The OpenMP and serial paths produce identical results by construction; the
// serial path doubles as the reference in tests and benchmarks.
template <class Body>
BatchResult run_batch(size_t n, uint64_t seed, Body&& body, const BatchOptions& opt = {}) {
  BatchResult out;
  out.trials = n;

  auto one = [&](size_t i) -> std::optional<Failure> {
    Rng rng = child_rng(seed, i);
    try {
      std::optional<Failure> f = body(i, rng);
      if (f) f->index = i;
      return f;
    } catch (const std::exception& e) {
      Failure f;
      f.index = i;
      f.anchor = "exception";
      f.message = e.what();
      return f;
    }
  };

#ifdef _OPENMP
  if (opt.parallel) {
    int threads = omp_get_max_threads();
    std::vector<std::vector<Failure>> local(static_cast<size_t>(threads));
#pragma omp parallel for schedule(dynamic, 16)
    for (long long i = 0; i < static_cast<long long>(n); ++i) {
      auto f = one(static_cast<size_t>(i));
      if (f) local[static_cast<size_t>(omp_get_thread_num())].push_back(std::move(*f));
    }
    for (auto& bucket : local)
      for (auto& f : bucket) out.failures.push_back(std::move(f));
    std::sort(out.failures.begin(), out.failures.end(),
              [](const Failure& a, const Failure& b) { return a.index < b.index; });
    out.failure_count = out.failures.size();
    if (out.failures.size() > opt.max_kept_failures) out.failures.resize(opt.max_kept_failures);
    return out;
  }
#endif
  for (size_t i = 0; i < n; ++i) {
    auto f = one(i);
    if (f) {
      ++out.failure_count;
      if (out.failures.size() < opt.max_kept_failures) out.failures.push_back(std::move(*f));
    }
  }
  return out;
}

} // namespace ii
