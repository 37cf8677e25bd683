#include <cmath>

#include "ii/instances.hpp"
#include "ii/measures.hpp"
#include "ii/sequences.hpp"
#include "ii/serialize.hpp"
#include "ii/suites.hpp"
#include "ii/universal.hpp"
#include "suite_util.hpp"

namespace ii {

using namespace detail;

SuiteResult suite_dyadic_invariants(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "dyadic_invariants";
  r.title = "norm axioms and representation invariance on step functions";
  const Exponent ps[] = {Exponent::of(1), Exponent::of(2), Exponent::of(3, 2),
                         Exponent::infinity()};
  absorb(r, run_batch(
                cfg.n(2000), cfg.seed + 20,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  DyadicStep f = random_step(rng, 7);
                  DyadicStep g = random_step(rng, 7);
                  Scalar c = random_scalar(rng, 8, 8);
                  for (const auto& p : ps) {
                    PNormValue nf = p_norm(f, p);
                    // triangle inequality
                    if (p_norm(add(f, g), p).value > nf.value + p_norm(g, p).value + 1e-12)
                      return make_failure("triangle", "triangle inequality failed at p=" +
                                                          to_string(p));
                    // absolute homogeneity
                    if (!close_rel(p_norm(scale(c, f), p).value, c.abs_double() * nf.value, 1e-12))
                      return make_failure("homogeneity", "homogeneity failed at p=" + to_string(p));
                    // representation invariance
                    if (!norms_agree(p_norm(refine(f, f.level + 2), p), nf, 1e-15) ||
                        !norms_agree(p_norm(canonicalize(f), p), nf, 1e-15))
                      return make_failure("representation", "norm not representation-invariant");
                    // zero iff zero
                    bool zero_fn = equal(f, zero_step());
                    if (zero_fn != (nf.value == 0))
                      return make_failure("definiteness", "norm zero mismatch");
                  }
                  if (integrate_exact(refine(f, f.level + 2)) != integrate_exact(f) ||
                      integrate_exact(canonicalize(f)) != integrate_exact(f))
                    return make_failure("representation", "integral not representation-invariant");
                  // integral bounded by the 1-norm, exactly
                  auto mag = integrate_exact(f).abs_rational();
                  auto n1 = p_norm(f, Exponent::of(1)).exact;
                  if (mag && n1 && *n1 < *mag)
                    return make_failure("integral_bound", "integral exceeds the 1-norm");
                  // linearity of the integral
                  if (integrate_exact(add(f, g)) != integrate_exact(f) + integrate_exact(g))
                    return make_failure("integral_linbox", "integral is not additive");
                  if (integrate_exact(scale(Scalar(-1), f)) != -integrate_exact(f))
                    return make_failure("integral_linbox", "integral is not odd");
                  return std::nullopt;
                },
                batch_opt(cfg)));
  r.ms = sw.ms();
  return r;
}

namespace {

// split-then-map evaluation of the universal morphism, no tables involved
Vec eval_universal_recursive(const AlgebraTarget& t, const DyadicStep& f) {
  if (f.level == 0) return f.coeffs[0] * t.basepoint;
  auto halves = split(f);
  return t.apply_delta(eval_universal_recursive(t, halves.first),
                       eval_universal_recursive(t, halves.second));
}

MorphismTable table_from_evaluator(const AlgebraTarget& t, int top,
                                   Vec (*eval)(const AlgebraTarget&, const DyadicStep&)) {
  MorphismTable table;
  table.target = t;
  for (int n = 0; n <= top; ++n) {
    Mat m(static_cast<size_t>(t.dim), size_t{1} << n);
    for (size_t j = 0; j < m.cols; ++j) {
      Vec col = eval(t, basis_step(n, j));
      for (size_t i = 0; i < m.rows; ++i) m.at(i, j) = col[i];
    }
    table.levels.push_back(std::move(m));
  }
  return table;
}

} // namespace

SuiteResult suite_universal_invariants(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "universal_invariants";
  r.title = "morphism laws, level coherence, chain structure, uniqueness probes";

  std::vector<AlgebraTarget> targets = {mean_target(Exponent::of(1)),
                                        mean_target(Exponent::of(2)),
                                        pair_mean_target(),
                                        first_block_target(),
                                        convex_scalar_target(Rational(1, 3)),
                                        cumulative_target(4),
                                        level_truncation_target(3, Exponent::of(2))};
  const int top = 6;
  for (const auto& t : targets) {
    ++r.trials;
    MorphismTable table = compile_universal(t, top);
    for (int n = 0; n < top; ++n) {
      if (mul(table.levels[static_cast<size_t>(n) + 1], duplication_matrix(n)) !=
          table.levels[static_cast<size_t>(n)]) {
        add_failure(r, "level_coherence", "refined level disagrees on " + t.name);
        break;
      }
    }
    MorphismReport rep =
        verify_morphism(table, static_cast<int>(cfg.n(500)), cfg.seed + 21, cfg.parallel);
    if (!rep.passed())
      add_failure(r, "morphism_laws",
                  t.name + ": " + rep.findings.front().kind + " " + rep.findings.front().detail);
    if (apply_universal(table, unit_step()) != t.basepoint)
      add_failure(r, "basepoint", "unit step misses the basepoint on " + t.name);
  }

  // chain structure
  ++r.trials;
  ChainReport doubling = adamek_chain(ChainKind::double_with_p_norm, Exponent::of(1), 5);
  if (doubling.dims != std::vector<size_t>{1, 2, 4, 8, 16, 32} || !doubling.connecting_isometries ||
      !doubling.structure_map_invertible || !doubling.basepoint_coherent)
    add_failure(r, "chain_doubling", "doubling chain report is off");
  ChainReport prepend = adamek_chain(ChainKind::prepend_scalar, Exponent::of(2), 3);
  if (prepend.dims != std::vector<size_t>{1, 2, 3, 4} || !prepend.connecting_isometries)
    add_failure(r, "chain_prepend", "prepend chain report is off");
  ChainReport trivial = adamek_chain(ChainKind::double_with_p_norm, Exponent::of(1), 0);
  if (trivial.dims != std::vector<size_t>{1}) add_failure(r, "chain_trivial", "stage-0 chain is off");

  // uniqueness probes
  ++r.trials;
  AlgebraTarget mean1 = mean_target(Exponent::of(1));
  MorphismTable compiled = compile_universal(mean1, 5);
  if (!uniqueness_probe(mean1, compiled)) add_failure(r, "uniqueness_self", "self probe failed");
  MorphismTable recursive = table_from_evaluator(mean1, 5, &eval_universal_recursive);
  if (!uniqueness_probe(mean1, recursive))
    add_failure(r, "uniqueness_bracketing", "alternate bracketing probe failed");
  MorphismTable left_endpoint = table_from_evaluator(first_block_target(), 5,
                                                     &eval_universal_recursive);
  left_endpoint.target = mean1;
  if (uniqueness_probe(mean1, left_endpoint))
    add_failure(r, "uniqueness_reject", "left-endpoint table accepted as the mean morphism");

  // contraction transport on sampled steps for every shipped target
  std::vector<MorphismTable> tables;
  for (const auto& t : targets) tables.push_back(compile_universal(t, 5));
  absorb(r, run_batch(
                cfg.n(1000), cfg.seed + 22,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  DyadicStep f = random_step(rng, 5, 8, 8);
                  for (const auto& table : tables) {
                    if (table.target.norm.eval(apply_universal(table, f)).value >
                        p_norm(f, table.target.p).value + 1e-9)
                      return make_failure("contraction_transport",
                                          "norm expanded on " + table.target.name, to_json(f));
                  }
                  return std::nullopt;
                },
                batch_opt(cfg)));
  r.ms = sw.ms();
  return r;
}

SuiteResult suite_instances_invariants(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "instances_invariants";
  r.title = "products split over juxtaposition; cumulative laws; operator assembly bounds";

  // identity function is fixed by the cumulative juxtaposition
  ++r.trials;
  for (int k = 0; k <= 3; ++k)
    if (!equal(juxtapose(identity_pl(k), identity_pl(k)), identity_pl(k + 1)))
      add_failure(r, "cumulative_fixed_point", "identity function moved at level " +
                                                   std::to_string(k));

  absorb(r, run_batch(
                cfg.n(2000), cfg.seed + 23,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  DyadicStep f1 = random_step(rng, 6, 8, 8);
                  DyadicStep f2 = random_step(rng, 6, 8, 8);
                  DyadicStep g1 = random_step(rng, 6, 8, 8);
                  DyadicStep g2 = random_step(rng, 6, 8, 8);
                  if (!equal(pointwise_mul(juxtapose(f1, f2), juxtapose(g1, g2)),
                             juxtapose(pointwise_mul(f1, g1), pointwise_mul(f2, g2))))
                    return make_failure("product_split", "product does not split", to_json(f1));

                  // cumulative square: indefinite of a juxtaposition
                  PiecewiseLinear lhs = indefinite_integral(juxtapose(f1, f2));
                  PiecewiseLinear rhs =
                      juxtapose(indefinite_integral(f1), indefinite_integral(f2));
                  if (!equal(lhs, rhs))
                    return make_failure("cumulative_square", "cumulative juxtaposition broken",
                                        to_json(f1));

                  // sup norm dominates every p-norm along the cylinder inclusion
                  CylinderFunction cf = interval_to_cantor(f1);
                  double sup = sup_norm(cf).value;
                  for (const auto& p : {Exponent::of(1), Exponent::of(2)})
                    if (p_norm(cantor_to_interval(cf), p).value > sup + 1e-12)
                      return make_failure("sup_domination", "p-norm exceeded the sup norm",
                                          to_json(f1));

                  // projection is idempotent and trivial beyond the level
                  int n = static_cast<int>(rng.range(0, 7));
                  CylinderFunction pr = cantor_project(cf, n);
                  if (!equal(cantor_project(pr, n).step, pr.step))
                    return make_failure("projection_idempotent", "projection not idempotent",
                                        to_json(f1));
                  if (!equal(cantor_project(cf, cf.step.level).step, cf.step))
                    return make_failure("projection_stable", "full-level projection moved data",
                                        to_json(f1));
                  return std::nullopt;
                },
                batch_opt(cfg)));

  // operator assembly: identity blocks give the identity, zero blocks vanish,
  // and the assembled operator norm obeys the two-block combination bound
  ++r.trials;
  {
    const int lvl = 3;
    size_t n = size_t{1} << lvl;
    if (juxtapose_hom(Mat::identity(n), Mat::identity(n)) != Mat::identity(2 * n))
      add_failure(r, "assembly_identity", "identity blocks did not assemble to the identity");
    if (juxtapose_hom(Mat::zero(n, n), Mat::zero(n, n)) != Mat::zero(2 * n, 2 * n))
      add_failure(r, "assembly_zero", "zero blocks did not assemble to zero");

    Rng rng(cfg.seed + 24);
    Exponent q = Exponent::of(2);
    Exponent pp = Exponent::of(2);
    for (int rep = 0; rep < 8; ++rep) {
      Mat phi1(n, n), phi2(n, n);
      for (auto& x : phi1.a) x = random_scalar(rng, 4, 4);
      for (auto& x : phi2.a) x = random_scalar(rng, 4, 4);
      Mat big = juxtapose_hom(phi1, phi2);

      std::vector<Vec> samples;
      std::vector<Vec> left_halves, right_halves;
      Rng vr(cfg.seed + 25 + static_cast<uint64_t>(rep));
      for (int s = 0; s < 64; ++s) {
        Vec v(2 * n);
        for (auto& x : v) x = random_scalar(vr, 6, 6);
        samples.push_back(v);
        left_halves.emplace_back(v.begin(), v.begin() + static_cast<long>(n));
        right_halves.emplace_back(v.begin() + static_cast<long>(n), v.end());
      }
      double n1 = sampled_operator_norm(phi1, q, lvl, Exponent::of(1), lvl, 64,
                                        cfg.seed + 26, left_halves);
      double n2 = sampled_operator_norm(phi2, q, lvl, Exponent::of(1), lvl, 64,
                                        cfg.seed + 27, right_halves);
      double bound = pair_power_combine(n1, n2, pp);
      double got = sampled_operator_norm(big, q, lvl + 1, Exponent::of(1), lvl + 1, 0,
                                         cfg.seed + 28, samples);
      if (got > bound + 1e-9) {
        add_failure(r, "assembly_contraction", "assembled norm exceeded the block combination");
        break;
      }
    }
  }

  // inclusion certificates
  absorb(r, run_batch(
                cfg.n(1000), cfg.seed + 29,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  DyadicStep f = random_step(rng, 6);
                  InclusionCert cert = inclusion(f, Exponent::of(2), Exponent::of(1));
                  if (!cert.certified || !equal(cert.f, f))
                    return make_failure("inclusion", "inclusion certificate failed", to_json(f));
                  return std::nullopt;
                },
                batch_opt(cfg)));
  r.ms = sw.ms();
  return r;
}

SuiteResult suite_sequences_invariants(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "sequences_invariants";
  r.title = "prepend isometry, prefix coherence, contraction of sequence morphisms";

  SeqTarget halving;
  halving.name = "halving-fold";
  halving.dim = 1;
  halving.p = Exponent::of(1);
  halving.delta = Mat{{Scalar(1, 2), Scalar(1, 2)}};
  halving.norm = NormSpec::sup_norm();
  SeqMorphismTable table = compile_seq_universal(halving, 13);

  // prefix coherence: longer tables restrict to shorter ones exactly
  ++r.trials;
  for (size_t n = 0; n + 1 < table.prefixes.size(); ++n) {
    const Mat& longer = table.prefixes[n + 1];
    const Mat& shorter = table.prefixes[n];
    for (size_t i = 0; i < shorter.rows; ++i)
      for (size_t j = 0; j < shorter.cols; ++j)
        if (longer.at(i, j) != shorter.at(i, j)) {
          add_failure(r, "prefix_coherence", "prefix matrices disagree");
          goto done;
        }
  }
done:

  absorb(r, run_batch(
                cfg.n(2000), cfg.seed + 30,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  std::vector<Scalar> cs(static_cast<size_t>(rng.range(0, 12)));
                  for (auto& c : cs) c = random_scalar(rng, 8, 8);
                  FiniteSeq a(cs);
                  Scalar c = random_scalar(rng, 8, 8);
                  const bool require_exact = field_mode() == Field::real;
                  for (const auto& p : {Exponent::of(1), Exponent::infinity()}) {
                    PNormValue lhs = seq_norm(seq_prepend(c, a), p);
                    PNormValue rhs =
                        direct_sum_norm(p_norm_unweighted({c}, p), seq_norm(a, p), p,
                                        /*weighted=*/false);
                    bool ok = require_exact ? (lhs.exact && rhs.exact && *lhs.exact == *rhs.exact)
                                            : norms_agree(lhs, rhs, 1e-12);
                    if (!ok)
                      return make_failure("prepend_isometry",
                                          "prepend norm mismatch at p=" + to_string(p),
                                          to_json(a));
                  }
                  // appended zeros do not change the image
                  FiniteSeq padded = a;
                  padded.coeffs.push_back(Scalar(0));
                  if (apply_seq_universal(table, padded) != apply_seq_universal(table, a))
                    return make_failure("zero_extension", "appended zero changed the image",
                                        to_json(a));
                  // contraction
                  if (table.target.norm.eval(apply_seq_universal(table, a)).value >
                      seq_norm(a, table.target.p).value + 1e-9)
                    return make_failure("contraction", "sequence morphism expanded the norm",
                                        to_json(a));
                  return std::nullopt;
                },
                batch_opt(cfg)));
  r.ms = sw.ms();
  return r;
}

SuiteResult suite_measures_invariants(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "measures_invariants";
  r.title = "category laws, norm bounds for subset elements, desk-scale uniqueness";

  std::vector<FunctorTargetPtr> targets = {field_total_target(), simple_lp_target(Exponent::of(1)),
                                           simple_lp_target(Exponent::of(2)),
                                           hilbert_twist_target(cfg.seed + 31)};

  // associativity and identities of partial-map composition, plus pullback
  // functoriality, on generated chains
  absorb(r, run_batch(
                cfg.n(800), cfg.seed + 32,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  FiniteMeasureSpace X = random_space(rng);
                  auto random_partial = [&rng](const FiniteMeasureSpace& S) {
                    std::vector<int> a = random_subset(rng, S.size());
                    PresMap q = random_quotient(rng, sub_space(S, a));
                    return make_partial(S, q.to_space, a, q.to);
                  };
                  PartialMap f = random_partial(X);
                  PartialMap g = random_partial(f.target);
                  PartialMap h = random_partial(g.target);
                  if (!partial_maps_equal(compose_partial(compose_partial(f, g), h),
                                          compose_partial(f, compose_partial(g, h))))
                    return make_failure("associativity", "composition is not associative",
                                        to_json(f));
                  if (!partial_maps_equal(compose_partial(identity_partial(X), f), f) ||
                      !partial_maps_equal(compose_partial(f, identity_partial(f.target)), f))
                    return make_failure("identity", "identity laws failed", to_json(f));
                  SimpleFn u = random_simple_fn(rng, h.target);
                  if (pullback(f, pullback(g, pullback(h, u))).values !=
                      pullback(compose_partial(f, compose_partial(g, h)), u).values)
                    return make_failure("pullback_functoriality", "pullback is not functorial",
                                        to_json(u));
                  // reversed subset inclusions are recognized
                  std::vector<int> sub = random_subset(rng, X.size());
                  if (!is_embedding(as_partial(embedding_of_subset(X, sub))))
                    return make_failure("embedding_recognition", "subset inclusion rejected",
                                        to_json(X));
                  return std::nullopt;
                },
                batch_opt(cfg)));

  // subset element norm bound and null-subset collapse
  absorb(r, run_batch(
                cfg.n(500), cfg.seed + 33,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  FiniteMeasureSpace X = random_space(rng);
                  std::vector<int> sub = random_subset(rng, X.size());
                  FiniteMeasureSpace Y = sub_space(X, sub);
                  for (const auto& t : targets) {
                    Vec v = t->unit_of_subset(X, sub);
                    double bound = t->p().inf ? (Y.total().is_zero() ? 0.0 : 1.0)
                                              : std::pow(Y.total().to_double(),
                                                         1.0 / t->p().value());
                    if (t->norm(X, v).value > bound + 1e-9)
                      return make_failure("subset_norm_bound[" + t->name() + "]",
                                          "subset element norm exceeds its measure bound",
                                          to_json(X));
                    if (Y.total().is_zero() && !t->is_zero_elem(X, v))
                      return make_failure("null_collapse[" + t->name() + "]",
                                          "null subset has a nonzero element", to_json(X));
                  }
                  return std::nullopt;
                },
                batch_opt(cfg)));

  // attainment of the norm bounds by the reference carrier
  for (const auto& p : {Exponent::of(1), Exponent::of(2), Exponent::infinity()}) {
    ++r.trials;
    AxiomOptions opt;
    opt.parallel = cfg.parallel;
    opt.check_attainment = true;
    AxiomReport rep =
        verify_axioms(*simple_lp_target(p), static_cast<int>(cfg.n(300)), cfg.seed + 34, opt);
    if (!rep.passed())
      add_failure(r, "attainment", "reference carrier missed equality at p=" + to_string(p),
                  rep.findings.empty() ? "" : rep.findings.front().payload);
  }

  // desk-scale uniqueness: independently specified natural families agree
  // with the canonical map
  ++r.trials;
  {
    Rng rng(cfg.seed + 35);
    std::vector<FiniteMeasureSpace> spaces;
    for (int i = 0; i < 30; ++i) spaces.push_back(random_space(rng));
    NaturalFamily weight_row = [](const FiniteMeasureSpace& X) {
      Mat m(1, X.size());
      for (size_t i = 0; i < X.size(); ++i) m.at(0, i) = Scalar(X.weights[i]);
      return m;
    };
    if (!agrees_with_universal_map(*field_total_target(), weight_row, spaces))
      add_failure(r, "uniqueness_field", "weight-row family disagrees with the canonical map");
    NaturalFamily identity_family = [](const FiniteMeasureSpace& X) {
      return Mat::identity(X.size());
    };
    if (!agrees_with_universal_map(*simple_lp_target(Exponent::of(2)), identity_family, spaces))
      add_failure(r, "uniqueness_simple", "identity family disagrees with the canonical map");
    NaturalFamily doubled_row = [](const FiniteMeasureSpace& X) {
      Mat m(1, X.size());
      for (size_t i = 0; i < X.size(); ++i) m.at(0, i) = Scalar(X.weights[i] + X.weights[i]);
      return m;
    };
    bool has_mass = false;
    for (const auto& X : spaces)
      if (!X.total().is_zero()) has_mass = true;
    if (has_mass && agrees_with_universal_map(*field_total_target(), doubled_row, spaces))
      add_failure(r, "uniqueness_negative", "doubled family accepted as the canonical map");
  }
  r.ms = sw.ms();
  return r;
}

SuiteResult suite_serialization_roundtrip(const SuiteConfig& cfg) {
  Stopwatch sw;
  SuiteResult r;
  r.name = "serialization_roundtrip";
  r.title = "wire formats reproduce values exactly";
  absorb(r, run_batch(
                cfg.n(500), cfg.seed + 36,
                [&](size_t, Rng& rng) -> std::optional<Failure> {
                  DyadicStep f = random_step(rng, 6);
                  if (!equal(step_from_json(to_json(f)), f) ||
                      to_json(step_from_json(to_json(f))) != to_json(f))
                    return make_failure("step", "step roundtrip failed", to_json(f));

                  PiecewiseLinear F = indefinite_integral(f);
                  if (!equal(pl_from_json(to_json(F)), F))
                    return make_failure("piecewise", "node roundtrip failed", to_json(F));

                  std::vector<Scalar> cs(static_cast<size_t>(rng.range(0, 6)));
                  for (auto& c : cs) c = random_scalar(rng, 8, 8);
                  FiniteSeq a(cs);
                  if (!equal(seq_from_json(to_json(a)), a))
                    return make_failure("sequence", "sequence roundtrip failed", to_json(a));

                  FiniteMeasureSpace X = random_space(rng);
                  if (!(space_from_json(to_json(X)) == X))
                    return make_failure("space", "space roundtrip failed", to_json(X));

                  SimpleFn fn = random_simple_fn(rng, X);
                  SimpleFn fn2 = simple_fn_from_json(to_json(fn));
                  if (!(fn2.space == fn.space) || fn2.values != fn.values)
                    return make_failure("simple_fn", "function roundtrip failed", to_json(fn));

                  std::vector<int> sub = random_subset(rng, X.size());
                  PartialMap pm = as_partial(embedding_of_subset(X, sub));
                  if (!partial_maps_equal(partial_map_from_json(to_json(pm)), pm))
                    return make_failure("partial_map", "map roundtrip failed", to_json(pm));

                  AlgebraTarget t = cumulative_target(2);
                  AlgebraTarget t2 = algebra_target_from_json(to_json(t));
                  if (t2.dim != t.dim || t2.p != t.p || t2.basepoint != t.basepoint ||
                      t2.delta != t.delta)
                    return make_failure("target", "target roundtrip failed", to_json(t));

                  MorphismTable table = compile_universal(t, 3);
                  MorphismTable table2 = morphism_table_from_json(to_json(table));
                  if (table2.levels != table.levels)
                    return make_failure("table", "table roundtrip failed");
                  return std::nullopt;
                },
                batch_opt(cfg)));
  r.ms = sw.ms();
  return r;
}

} // namespace ii
