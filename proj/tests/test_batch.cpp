#include <doctest.h>

#include "ii/batch.hpp"
#include "ii/report.hpp"
#include "ii/suites.hpp"

using namespace ii;

namespace {

std::optional<Failure> flaky_body(size_t i, Rng& rng) {
  uint64_t draw = rng.u64();
  if (i % 97 == 3) {
    Failure f;
    f.anchor = "planted";
    f.message = "draw " + std::to_string(draw % 1000);
    return f;
  }
  if (i == 500) throw error("boom");
  return std::nullopt;
}

} // namespace

TEST_CASE("serial and parallel batches produce identical outcomes") {
  BatchOptions serial;
  serial.parallel = false;
  serial.max_kept_failures = 100;
  BatchOptions parallel;
  parallel.parallel = true;
  parallel.max_kept_failures = 100;

  BatchResult a = run_batch(2000, 77, flaky_body, serial);
  BatchResult b = run_batch(2000, 77, flaky_body, parallel);
  CHECK(a.failure_count == b.failure_count);
  REQUIRE(a.failures.size() == b.failures.size());
  for (size_t i = 0; i < a.failures.size(); ++i) CHECK(a.failures[i] == b.failures[i]);
  CHECK(a.failure_count == 2000 / 97 + 1 + 1);  // planted failures plus the thrown one

  // repeated runs are bit-identical
  BatchResult c = run_batch(2000, 77, flaky_body, parallel);
  CHECK(b.failures == c.failures);

  // different seed, different draws, same planted indices
  BatchResult d = run_batch(2000, 78, flaky_body, serial);
  CHECK(d.failure_count == a.failure_count);
  CHECK(d.failures[0].message != a.failures[0].message);
}

TEST_CASE("exceptions become findings with the trial index") {
  BatchOptions opt;
  opt.parallel = false;
  opt.max_kept_failures = 100;
  BatchResult r = run_batch(600, 1, flaky_body, opt);
  bool seen = false;
  for (const auto& f : r.failures)
    if (f.index == 500 && f.anchor == "exception" && f.message == "boom") seen = true;
  CHECK(seen);
}

TEST_CASE("failure cap keeps the earliest findings") {
  BatchOptions opt;
  opt.parallel = true;
  opt.max_kept_failures = 3;
  BatchResult r = run_batch(2000, 9, flaky_body, opt);
  CHECK(r.failures.size() == 3);
  CHECK(r.failures[0].index == 3);
  CHECK(r.failures[1].index == 100);
  CHECK(r.failures[2].index == 197);
  CHECK(r.failure_count > 3);
}

TEST_CASE("verification reports are byte-identical across runs and thread counts") {
  SuiteConfig cfg;
  cfg.seed = 4242;
  cfg.divisor = 200;

  auto render = [](const SuiteConfig& c) {
    RunReport rep;
    rep.command = "determinism-check";
    rep.seed = c.seed;
    rep.suites = {suite_juxtaposition_isometry(c), suite_power_mean_monotonicity(c),
                  suite_sequence_universality(c)};
    return report_to_json(rep);
  };

  std::string first = render(cfg);
  std::string second = render(cfg);
  CHECK(first == second);
  SuiteConfig serial_cfg = cfg;
  serial_cfg.parallel = false;
  CHECK(render(serial_cfg) == first);
}
