#include "ii/universal.hpp"

#include <sstream>

#include "ii/batch.hpp"
#include "ii/random.hpp"

namespace ii {

PNormValue NormSpec::eval(const Vec& x) const {
  switch (kind) {
    case Kind::weighted_p: {
      if (weights.empty()) return p_norm_unweighted(x, p);
      if (weights.size() != x.size()) throw error("norm weight count mismatch");
      return p_norm_weighted(x, weights, p);
    }
    case Kind::euclidean:
      return p_norm_unweighted(x, Exponent::of(2));
    case Kind::sup:
      return p_norm_unweighted(x, Exponent::infinity());
    case Kind::dual_table: {
      if (table.cols != x.size()) throw error("norm table shape mismatch");
      Vec vals(table.rows);
      for (size_t i = 0; i < table.rows; ++i) {
        Scalar acc;
        for (size_t j = 0; j < table.cols; ++j) acc += table.at(i, j) * x[j];
        vals[i] = acc;
      }
      return p_norm_unweighted(vals, Exponent::infinity());
    }
  }
  throw error("unknown norm kind");
}

namespace {

std::string format_vec(const Vec& v) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
  os << "]";
  return os.str();
}

std::string format_step(const DyadicStep& f) {
  return "level " + std::to_string(f.level) + " " + format_vec(f.coeffs);
}

// Exact contraction decision for one-dimensional targets: on the scalar field
// every norm is a multiple of |.|, so the operator norm of (a b) against the
// weighted p-sum is 2^(1/p) * |(a,b)|_q with q conjugate. Returns -1 when the
// exponent or the entries do not admit an exact decision.
int exact_scalar_gate(const AlgebraTarget& t) {
  const Scalar& a = t.delta.at(0, 0);
  const Scalar& b = t.delta.at(0, 1);
  if (t.p.is_one()) {
    auto aa = a.abs_rational(), ab = b.abs_rational();
    if (!aa || !ab) return -1;
    return max(*aa, *ab) <= Rational(1, 2) ? 1 : 0;
  }
  if (t.p.is_integer() && t.p.as_integer() == 2) {
    Rational s = a.abs2() + b.abs2();
    return s + s <= Rational(1) ? 1 : 0;
  }
  if (t.p.inf) {
    auto aa = a.abs_rational(), ab = b.abs_rational();
    if (!aa || !ab) return -1;
    return *aa + *ab <= Rational(1) ? 1 : 0;
  }
  return -1;
}

struct ContractionWitness {
  Vec u, w;
  double ratio = 0;
};

double delta_ratio(const AlgebraTarget& t, const Vec& u, const Vec& w) {
  double in = pair_power_combine(t.norm.eval(u).value, t.norm.eval(w).value, t.p);
  if (in <= 0) return 0;
  return t.norm.eval(t.apply_delta(u, w)).value / in;
}

// Keep simplifying coordinates while the violation persists. Candidates are
// strictly simpler than the current value, so the loop terminates.
ContractionWitness shrink_witness(const AlgebraTarget& t, Vec u, Vec w, double tol) {
  auto violates = [&](const Vec& a, const Vec& b) { return delta_ratio(t, a, b) > 1 + tol; };
  auto rank = [](const Scalar& s) {
    if (s.is_zero()) return 0;
    if (s == Scalar(1) || s == Scalar(-1)) return 1;
    return 2;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < u.size() * 2; ++i) {
      Vec& side = i < u.size() ? u : w;
      size_t j = i < u.size() ? i : i - u.size();
      Scalar save = side[j];
      for (Scalar cand : {Scalar(0), Scalar(1), Scalar(-1)}) {
        if (rank(cand) >= rank(save)) continue;
        side[j] = cand;
        if (violates(u, w)) {
          changed = true;
          break;
        }
        side[j] = save;
      }
    }
  }
  return {u, w, delta_ratio(t, u, w)};
}

} // namespace

void validate_target(const AlgebraTarget& t, const GateOptions& opt) {
  if (t.dim < 1) throw error("target dimension must be positive");
  if (t.basepoint.size() != static_cast<size_t>(t.dim)) throw error("basepoint dimension mismatch");
  if (t.delta.rows != static_cast<size_t>(t.dim) || t.delta.cols != static_cast<size_t>(2 * t.dim))
    throw error("delta must be dim x 2*dim");

  PNormValue nb = t.norm.eval(t.basepoint);
  bool base_ok = nb.exact ? (*nb.exact <= Rational(1)) : (nb.value <= 1 + 1e-12);
  if (!base_ok) throw error("target axiom violated: basepoint outside the unit ball");

  Vec fixed = t.apply_delta(t.basepoint, t.basepoint);
  if (fixed != t.basepoint)
    throw error("target axiom violated: delta does not fix the basepoint");

  if (t.allow_bounded) return;

  if (t.dim == 1) {
    int g = exact_scalar_gate(t);
    if (g == 0)
      throw error("target axiom violated: delta is not a contraction (witness: unit basis pair)");
    if (g == 1) return;
  }

  // Exact sufficient condition for p = 1 with a sup-norm target: if every
  // row puts total mass <= 1/2 on each half, each output coordinate is
  // bounded by the averaged pair norm.
  if (t.p.is_one() && t.norm.kind == NormSpec::Kind::sup) {
    bool rows_ok = true;
    for (size_t i = 0; i < t.delta.rows && rows_ok; ++i) {
      Rational left(0), right(0);
      for (size_t j = 0; j < t.delta.cols; ++j) {
        auto a = t.delta.at(i, j).abs_rational();
        if (!a) {
          rows_ok = false;
          break;
        }
        (j < static_cast<size_t>(t.dim) ? left : right) += *a;
      }
      if (rows_ok && (Rational(1, 2) < left || Rational(1, 2) < right)) rows_ok = false;
    }
    if (rows_ok) return;
  }

  Rng rng(opt.seed);
  for (int s = 0; s < opt.samples; ++s) {
    Vec u(t.dim), w(t.dim);
    for (auto& x : u) x = random_scalar(rng, 4, 4);
    for (auto& x : w) x = random_scalar(rng, 4, 4);
    if (delta_ratio(t, u, w) > 1 + opt.tol) {
      ContractionWitness cw = shrink_witness(t, u, w, opt.tol);
      std::ostringstream os;
      os << "target axiom violated: delta is not a contraction (witness u=" << format_vec(cw.u)
         << " w=" << format_vec(cw.w) << " ratio=" << cw.ratio << ")";
      throw error(os.str());
    }
  }
}

MorphismTable compile_universal(const AlgebraTarget& t, int max_lvl, const GateOptions& opt) {
  validate_target(t, opt);
  if (max_lvl < 0 || max_lvl > max_level()) throw error("compile level out of range");

  MorphismTable table;
  table.target = t;
  Mat level0(t.dim, 1);
  for (int i = 0; i < t.dim; ++i) level0.at(i, 0) = t.basepoint[i];
  table.levels.push_back(std::move(level0));

  Mat dl(t.dim, t.dim), dr(t.dim, t.dim);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) {
      dl.at(i, j) = t.delta.at(i, j);
      dr.at(i, j) = t.delta.at(i, j + t.dim);
    }

  for (int n = 0; n < max_lvl; ++n) {
    const Mat& cur = table.levels.back();
    table.levels.push_back(hcat(mul(dl, cur), mul(dr, cur)));
  }
  return table;
}

Vec apply_universal(const MorphismTable& table, const DyadicStep& f) {
  if (f.level > table.top_level())
    throw error("step level exceeds compiled table; recompile with a higher max level");
  return mul(table.levels[static_cast<size_t>(f.level)], f.coeffs);
}

MorphismReport verify_morphism(const MorphismTable& table, int samples, uint64_t seed,
                               bool parallel) {
  if (table.top_level() < 1)
    throw error("table must be compiled to level 1 or deeper to verify");
  MorphismReport rep;
  rep.samples = static_cast<size_t>(samples);
  const AlgebraTarget& t = table.target;

  Vec at_unit = apply_universal(table, unit_step());
  if (at_unit != t.basepoint) {
    ++rep.failures;
    rep.findings.push_back({"basepoint", "unit step does not map to the basepoint"});
  }

  int lvl_cap = table.top_level() - 1;
  BatchOptions bopt;
  bopt.parallel = parallel;
  BatchResult res = run_batch(
      static_cast<size_t>(samples), seed,
      [&](size_t, Rng& rng) -> std::optional<Failure> {
        DyadicStep f = random_step(rng, lvl_cap, 8, 8);
        DyadicStep g = random_step(rng, lvl_cap, 8, 8);
        Vec lhs = apply_universal(table, juxtapose(f, g));
        Vec rhs = t.apply_delta(apply_universal(table, f), apply_universal(table, g));
        if (lhs != rhs) {
          Failure fail;
          fail.anchor = "morphism_square";
          fail.message = "juxtaposition square broken at f=" + format_step(f) + " g=" + format_step(g);
          return fail;
        }
        PNormValue vn = t.norm.eval(apply_universal(table, f));
        PNormValue fn = p_norm(f, t.p);
        if (vn.value > fn.value + 1e-9) {
          Failure fail;
          fail.anchor = "contraction_transport";
          fail.message = "norm expanded at f=" + format_step(f);
          return fail;
        }
        return std::nullopt;
      },
      bopt);
  rep.failures += res.failure_count;
  for (const auto& f : res.failures) rep.findings.push_back({f.anchor, f.message});
  return rep;
}

bool uniqueness_probe(const AlgebraTarget& t, const MorphismTable& candidate) {
  if (candidate.levels.empty()) throw error("morphism table shape mismatch");
  for (size_t n = 0; n < candidate.levels.size(); ++n) {
    const Mat& m = candidate.levels[n];
    if (m.rows != static_cast<size_t>(t.dim) || m.cols != (size_t{1} << n))
      throw error("morphism table shape mismatch");
  }
  MorphismTable reference = compile_universal(t, candidate.top_level());
  for (size_t n = 0; n < candidate.levels.size(); ++n)
    if (candidate.levels[n] != reference.levels[n]) return false;
  return true;
}

Mat duplication_matrix(int n) {
  size_t cols = size_t{1} << n;
  Mat m(cols * 2, cols);
  for (size_t j = 0; j < cols; ++j) {
    m.at(2 * j, j) = Scalar(1);
    m.at(2 * j + 1, j) = Scalar(1);
  }
  return m;
}

LevelApproximation truncate_to_level(const std::function<Scalar(int, size_t)>& sampler, int level,
                                     Exponent p) {
  if (level < 0 || level > max_level()) throw error("truncation level out of range");
  auto sample = [&](int lvl) {
    std::vector<Scalar> cs(size_t{1} << lvl);
    for (size_t j = 0; j < cs.size(); ++j) cs[j] = sampler(lvl, j);
    return DyadicStep(lvl, std::move(cs));
  };
  LevelApproximation out;
  out.step = sample(level);
  if (level == 0) {
    out.defect = p_norm(zero_step(), p);
    return out;
  }
  out.defect = p_norm(sub(out.step, sample(level - 1)), p);
  return out;
}

namespace {

// append-zero inclusion for the scalar-prepend chain
Mat append_zero_matrix(size_t dim) {
  Mat m(dim + 1, dim);
  for (size_t j = 0; j < dim; ++j) m.at(j, j) = Scalar(1);
  return m;
}

bool norms_match_exactly(const PNormValue& a, const PNormValue& b) {
  if (a.exact && b.exact) return *a.exact == *b.exact;
  if (a.exact_pow && b.exact_pow) return *a.exact_pow == *b.exact_pow;
  return close_rel(a.value, b.value, 1e-12);
}

} // namespace

ChainReport adamek_chain(ChainKind kind, Exponent p, int stages) {
  if (stages < 0) throw error("chain stages must be non-negative");
  ChainReport rep;
  rep.kind = kind;
  rep.p = p;
  rep.stages = stages;

  Rng rng(7);
  if (kind == ChainKind::double_with_p_norm) {
    for (int n = 0; n <= stages; ++n) rep.dims.push_back(size_t{1} << n);
    for (int n = 0; n < stages; ++n) {
      Mat conn = duplication_matrix(n);
      // naturality of the inclusions: duplicating after assembling two
      // level-n blocks equals assembling the two duplicated blocks
      if (n > 0) {
        Mat prev = duplication_matrix(n - 1);
        if (conn != block_diag(prev, prev)) rep.structure_map_invertible = false;
      }
      // connecting maps preserve the stage norm (cell weights halve as the
      // cell count doubles)
      for (int s = 0; s < 16; ++s) {
        Vec x(size_t{1} << n);
        for (auto& c : x) c = random_scalar(rng, 8, 8);
        PNormValue before = p_norm_uniform(x, div_pow2(Rational(1), n), p);
        PNormValue after = p_norm_uniform(mul(conn, x), div_pow2(Rational(1), n + 1), p);
        if (!norms_match_exactly(before, after)) rep.connecting_isometries = false;
      }
      // stage basepoints are the all-ones vectors
      Vec ones(size_t{1} << n, Scalar(1));
      if (!vec_is_zero(mul(conn, ones) - Vec(size_t{1} << (n + 1), Scalar(1))))
        rep.basepoint_coherent = false;
      // invertibility of the assembly map at the step level
      for (int s = 0; s < 8; ++s) {
        DyadicStep f = random_step(rng, n + 1, 8, 8);
        auto halves = split(f);
        if (!equal(juxtapose(halves.first, halves.second), f)) rep.structure_map_invertible = false;
      }
    }
  } else {
    for (int n = 0; n <= stages; ++n) rep.dims.push_back(static_cast<size_t>(n) + 1);
    for (int n = 0; n < stages; ++n) {
      Mat conn = append_zero_matrix(static_cast<size_t>(n) + 1);
      for (int s = 0; s < 16; ++s) {
        Vec x(static_cast<size_t>(n) + 1);
        for (auto& c : x) c = random_scalar(rng, 8, 8);
        PNormValue before = p_norm_unweighted(x, p);
        PNormValue after = p_norm_unweighted(mul(conn, x), p);
        if (!norms_match_exactly(before, after)) rep.connecting_isometries = false;
      }
    }
  }
  return rep;
}

} // namespace ii
