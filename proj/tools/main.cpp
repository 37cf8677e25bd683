#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ii/config.hpp"
#include "ii/instances.hpp"
#include "ii/measures.hpp"
#include "ii/report.hpp"
#include "ii/sequences.hpp"
#include "ii/serialize.hpp"
#include "ii/suites.hpp"
#include "ii/universal.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

// file path, "-" for stdin, or inline JSON
std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  if (!path.empty() && (path[0] == '{' || path[0] == '[')) return path;
  std::ifstream in(path);
  if (!in) throw ii::error("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw ii::error("cannot open output file: " + out_path);
  out << text << "\n";
}

std::string scalar_out(const ii::Scalar& c) { return ii::to_json(c); }

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact dyadic function spaces, universal morphism compiler, and finite measure "
               "space verification"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "text";
  bool complex_mode = false;
  bool serial = false;
  int threads = 0;
  app.add_option("--format", format, "output format for reports: json|text")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--complex", complex_mode, "generate and accept complex scalars");
  app.add_flag("--serial", serial, "run verification batches on one thread");
  app.add_option("--threads", threads, "worker threads for verification batches");

  // compile
  auto* compile_cmd = app.add_subcommand("compile", "compile the universal morphism table");
  std::string compile_target, compile_out;
  int compile_level = 8;
  compile_cmd->add_option("--target", compile_target, "target JSON file")->required();
  compile_cmd->add_option("--max-level", compile_level, "deepest level to compile");
  compile_cmd->add_option("-o,--output", compile_out, "output file (default stdout)");

  // apply
  auto* apply_cmd = app.add_subcommand("apply", "apply a compiled table to a step function");
  std::string apply_table, apply_step;
  apply_cmd->add_option("--table", apply_table, "table JSON file")->required();
  apply_cmd->add_option("--step", apply_step, "step JSON file")->required();

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "check the morphism laws of a compiled table");
  std::string verify_table;
  int verify_samples = 1000;
  uint64_t verify_seed = 42;
  verify_cmd->add_option("--table", verify_table, "table JSON file")->required();
  verify_cmd->add_option("--samples", verify_samples, "random step pairs to draw");
  verify_cmd->add_option("--seed", verify_seed, "random seed");

  // integrate / indefinite / pair / cantor-project
  auto* integrate_cmd = app.add_subcommand("integrate", "integrate a step function over [0,1]");
  std::string integrate_in;
  integrate_cmd->add_option("step", integrate_in, "step JSON file")->required();

  auto* indefinite_cmd = app.add_subcommand("indefinite", "cumulative integral of a step function");
  std::string indefinite_in, indefinite_out;
  indefinite_cmd->add_option("step", indefinite_in, "step JSON file")->required();
  indefinite_cmd->add_option("-o,--output", indefinite_out, "output file (default stdout)");

  auto* pair_cmd = app.add_subcommand("pair", "conjugate-exponent pairing of two step functions");
  std::string pair_f, pair_g, pair_p = "2", pair_q = "2";
  pair_cmd->add_option("f", pair_f, "first step JSON file")->required();
  pair_cmd->add_option("g", pair_g, "second step JSON file")->required();
  pair_cmd->add_option("--p", pair_p, "exponent for the first factor");
  pair_cmd->add_option("--q", pair_q, "exponent for the second factor");

  auto* cantor_cmd = app.add_subcommand("cantor-project",
                                        "truncate a cylinder function to its first bits");
  std::string cantor_in;
  int cantor_bits = 0;
  cantor_cmd->add_option("step", cantor_in, "cylinder JSON file")->required();
  cantor_cmd->add_option("--bits", cantor_bits, "bits to keep")->required();

  // seq-apply
  auto* seq_cmd = app.add_subcommand("seq-apply", "apply a sequence-space universal map");
  std::string seq_target, seq_in;
  seq_cmd->add_option("--target", seq_target, "sequence target JSON file")->required();
  seq_cmd->add_option("--seq", seq_in, "sequence JSON file")->required();

  // measure group
  auto* measure_cmd = app.add_subcommand("measure", "finite measure space operations");
  measure_cmd->require_subcommand(1);

  auto* m_integrate = measure_cmd->add_subcommand("integrate", "integrate a simple function");
  std::string m_integrate_in;
  m_integrate->add_option("fn", m_integrate_in, "simple function JSON file")->required();

  auto* m_psi = measure_cmd->add_subcommand("psi", "canonical natural map into a functor target");
  std::string m_psi_target, m_psi_in;
  m_psi->add_option("--target", m_psi_target, "functor target selector JSON file")->required();
  m_psi->add_option("fn", m_psi_in, "simple function JSON file")->required();

  auto* m_verify = measure_cmd->add_subcommand("verify", "verify the functor target axioms");
  std::string m_category = "B";
  std::string m_verify_target;
  std::string m_verify_p = "1";
  int m_trials = 500;
  uint64_t m_seed = 42;
  m_verify->add_option("--category", m_category, "Bemb, B, or H")
      ->check(CLI::IsMember({"Bemb", "B", "H"}));
  m_verify->add_option("--target", m_verify_target, "functor target selector JSON file");
  m_verify->add_option("--p", m_verify_p, "exponent for the default target");
  m_verify->add_option("--trials", m_trials, "generated-space trials");
  m_verify->add_option("--seed", m_seed, "random seed");

  auto* m_density = measure_cmd->add_subcommand("density", "density measure of a simple function");
  std::string m_density_in;
  m_density->add_option("fn", m_density_in, "simple function JSON file")->required();

  // verify-all
  auto* all_cmd = app.add_subcommand("verify-all", "run every verification suite");
  uint64_t all_seed = 42;
  size_t all_divisor = 1;
  all_cmd->add_option("--seed", all_seed, "random seed");
  all_cmd->add_option("--trials-divisor", all_divisor,
                      "divide the stated trial counts by this factor");

  CLI11_PARSE(app, argc, argv);

  try {
    ii::set_field_mode(complex_mode ? ii::Field::complex : ii::Field::real);
#ifdef _OPENMP
    if (threads > 0) omp_set_num_threads(threads);
#endif
    bool parallel = !serial;

    if (*compile_cmd) {
      ii::AlgebraTarget t = ii::algebra_target_from_json(slurp(compile_target));
      ii::MorphismTable table = ii::compile_universal(t, compile_level);
      emit(ii::to_json(table), compile_out);
      return 0;
    }
    if (*apply_cmd) {
      ii::MorphismTable table = ii::morphism_table_from_json(slurp(apply_table));
      ii::DyadicStep f = ii::step_from_json(slurp(apply_step));
      ii::Vec out = ii::apply_universal(table, f);
      std::string sep;
      std::cout << "[";
      for (const auto& c : out) {
        std::cout << sep << scalar_out(c);
        sep = ",";
      }
      std::cout << "]\n";
      return 0;
    }
    if (*verify_cmd) {
      ii::MorphismTable table = ii::morphism_table_from_json(slurp(verify_table));
      ii::MorphismReport rep = ii::verify_morphism(table, verify_samples, verify_seed, parallel);
      std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << rep.samples << " samples, "
                << rep.failures << " failures\n";
      for (const auto& f : rep.findings) std::cout << "  [" << f.kind << "] " << f.detail << "\n";
      return rep.passed() ? 0 : 1;
    }
    if (*integrate_cmd) {
      std::cout << scalar_out(ii::integrate(ii::step_from_json(slurp(integrate_in)))) << "\n";
      return 0;
    }
    if (*indefinite_cmd) {
      ii::PiecewiseLinear F = ii::indefinite_integral(ii::step_from_json(slurp(indefinite_in)));
      emit(ii::to_json(F), indefinite_out);
      return 0;
    }
    if (*pair_cmd) {
      ii::DyadicStep f = ii::step_from_json(slurp(pair_f));
      ii::DyadicStep g = ii::step_from_json(slurp(pair_g));
      ii::Scalar v = ii::pairing(f, g, ii::parse_exponent(pair_p), ii::parse_exponent(pair_q));
      std::cout << scalar_out(v) << "\n";
      return 0;
    }
    if (*cantor_cmd) {
      ii::CylinderFunction f(ii::step_from_json(slurp(cantor_in)));
      std::cout << ii::to_json(ii::cantor_project(f, cantor_bits).step) << "\n";
      return 0;
    }
    if (*seq_cmd) {
      ii::SeqTarget t = ii::seq_target_from_json(slurp(seq_target));
      ii::FiniteSeq a = ii::seq_from_json(slurp(seq_in));
      ii::Vec out = ii::seq_universal(t, a);
      std::string sep;
      std::cout << "[";
      for (const auto& c : out) {
        std::cout << sep << scalar_out(c);
        sep = ",";
      }
      std::cout << "]\n";
      return 0;
    }
    if (*m_integrate) {
      std::cout << scalar_out(ii::integrate(ii::simple_fn_from_json(slurp(m_integrate_in))))
                << "\n";
      return 0;
    }
    if (*m_psi) {
      ii::FunctorTargetPtr t = ii::functor_target_from_json(slurp(m_psi_target));
      ii::SimpleFn f = ii::simple_fn_from_json(slurp(m_psi_in));
      ii::Vec out = ii::universal_map(*t, f);
      std::string sep;
      std::cout << "[";
      for (const auto& c : out) {
        std::cout << sep << scalar_out(c);
        sep = ",";
      }
      std::cout << "]\n";
      return 0;
    }
    if (*m_verify) {
      ii::FunctorTargetPtr t;
      if (!m_verify_target.empty()) {
        t = ii::functor_target_from_json(slurp(m_verify_target));
      } else if (m_category == "Bemb") {
        t = ii::measures_target();
      } else if (m_category == "H") {
        t = ii::hilbert_twist_target(m_seed);
      } else {
        t = ii::simple_lp_target(ii::parse_exponent(m_verify_p));
      }
      ii::AxiomOptions opt;
      opt.parallel = parallel;
      if (m_trials == 0) std::cerr << "warning: zero trials requested; result is vacuous\n";
      ii::AxiomReport rep = ii::verify_axioms(*t, m_trials, m_seed, opt);
      std::cout << (rep.passed() ? "PASS" : "FAIL") << " " << t->name() << ": " << rep.trials
                << " trials, " << rep.checks << " checks, " << rep.failure_count << " failures\n";
      for (const auto& f : rep.findings)
        std::cout << "  [" << f.anchor << "] " << f.message << " " << f.payload << "\n";
      return rep.passed() ? 0 : 1;
    }
    if (*m_density) {
      std::cout << ii::to_json(ii::density_measure(ii::simple_fn_from_json(slurp(m_density_in))))
                << "\n";
      return 0;
    }
    if (*all_cmd) {
      ii::SuiteConfig cfg;
      cfg.seed = all_seed;
      cfg.parallel = parallel;
      cfg.divisor = all_divisor ? all_divisor : 1;
      if (all_divisor > 1000) std::cerr << "warning: trial counts near zero; result is vacuous\n";
      ii::RunReport report;
      std::ostringstream cmd;
      for (int i = 0; i < argc; ++i) cmd << (i ? " " : "") << argv[i];
      report.command = cmd.str();
      report.seed = all_seed;
      report.suites = ii::run_all_suites(cfg);
      if (format == "json")
        std::cout << ii::report_to_json(report) << "\n";
      else
        std::cout << ii::report_to_text(report);
      return report.all_passed() ? 0 : 1;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
