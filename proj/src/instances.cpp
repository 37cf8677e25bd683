#include "ii/instances.hpp"

#include "ii/error.hpp"
#include "ii/random.hpp"

namespace ii {

PiecewiseLinear::PiecewiseLinear() : values{Scalar(0), Scalar(0)} { level = 0; }

PiecewiseLinear::PiecewiseLinear(int lvl, std::vector<Scalar> vals)
    : level(lvl), values(std::move(vals)) {
  if (lvl < 0 || lvl > max_level()) throw error("piecewise-linear level out of range");
  if (values.size() != (size_t{1} << level) + 1)
    throw error("piecewise-linear node count is not 2^level + 1");
  if (!values[0].is_zero()) throw error("piecewise-linear function must vanish at 0");
}

PiecewiseLinear zero_pl() { return PiecewiseLinear(0, {Scalar(0), Scalar(0)}); }

PiecewiseLinear identity_pl(int lvl) {
  std::vector<Scalar> vals;
  size_t n = size_t{1} << lvl;
  vals.reserve(n + 1);
  for (size_t i = 0; i <= n; ++i) vals.push_back(Scalar(Rational::make(static_cast<int128>(i), static_cast<int128>(n))));
  return PiecewiseLinear(lvl, std::move(vals));
}

PiecewiseLinear refine(const PiecewiseLinear& F, int m) {
  if (m < F.level) throw error("cannot coarsen by refine");
  PiecewiseLinear cur = F;
  while (cur.level < m) {
    std::vector<Scalar> next(cur.values.size() * 2 - 1);
    for (size_t i = 0; i + 1 < cur.values.size(); ++i) {
      next[2 * i] = cur.values[i];
      next[2 * i + 1] = div_pow2(cur.values[i] + cur.values[i + 1], 1);
    }
    next.back() = cur.values.back();
    cur = PiecewiseLinear(cur.level + 1, std::move(next));
  }
  return cur;
}

bool equal(const PiecewiseLinear& F, const PiecewiseLinear& G) {
  int common = F.level > G.level ? F.level : G.level;
  return refine(F, common).values == refine(G, common).values;
}

PNormValue sup_norm(const PiecewiseLinear& F) {
  return p_norm_unweighted(F.values, Exponent::infinity());
}

PiecewiseLinear add(const PiecewiseLinear& F, const PiecewiseLinear& G) {
  int common = F.level > G.level ? F.level : G.level;
  PiecewiseLinear rf = refine(F, common);
  PiecewiseLinear rg = refine(G, common);
  std::vector<Scalar> vals(rf.values.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = rf.values[i] + rg.values[i];
  return PiecewiseLinear(common, std::move(vals));
}

PiecewiseLinear scale(const Scalar& c, const PiecewiseLinear& F) {
  std::vector<Scalar> vals(F.values.size());
  for (size_t i = 0; i < vals.size(); ++i) vals[i] = c * F.values[i];
  return PiecewiseLinear(F.level, std::move(vals));
}

PiecewiseLinear juxtapose(const PiecewiseLinear& F, const PiecewiseLinear& G) {
  int common = F.level > G.level ? F.level : G.level;
  PiecewiseLinear rf = refine(F, common);
  PiecewiseLinear rg = refine(G, common);
  size_t half = size_t{1} << common;
  std::vector<Scalar> vals(2 * half + 1);
  Scalar f_end = div_pow2(rf.values[half], 1);
  for (size_t i = 0; i <= half; ++i) vals[i] = div_pow2(rf.values[i], 1);
  for (size_t i = 1; i <= half; ++i) vals[half + i] = f_end + div_pow2(rg.values[i], 1);
  return PiecewiseLinear(common + 1, std::move(vals));
}

Scalar integrate(const DyadicStep& f) {
  thread_local MorphismTable cache = compile_universal(mean_target(Exponent::of(1)), 4);
  if (f.level > cache.top_level())
    cache = compile_universal(mean_target(Exponent::of(1)), f.level);
  return apply_universal(cache, f)[0];
}

PiecewiseLinear indefinite_integral(const DyadicStep& f) {
  std::vector<Scalar> vals(f.coeffs.size() + 1);
  Scalar acc;
  for (size_t i = 0; i < f.coeffs.size(); ++i) {
    acc += div_pow2(f.coeffs[i], f.level);
    vals[i + 1] = acc;
  }
  return PiecewiseLinear(f.level, std::move(vals));
}

DyadicStep derivative(const PiecewiseLinear& F) {
  Scalar cell_count(Rational::make(int128{1} << F.level, 1));
  std::vector<Scalar> cs(F.values.size() - 1);
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = cell_count * (F.values[i + 1] - F.values[i]);
  return DyadicStep(F.level, std::move(cs));
}

InclusionCert inclusion(const DyadicStep& f, Exponent r, Exponent p) {
  if (r.inf) throw error("inclusion requires a finite source exponent");
  if (p.inf || r < p) throw error("wrong direction: inclusion goes r into p");
  InclusionCert cert;
  cert.f = f;
  cert.norm_r = p_norm(f, r);
  cert.norm_p = p_norm(f, p);
  if (cert.norm_p.exact && cert.norm_r.exact)
    cert.certified = *cert.norm_p.exact <= *cert.norm_r.exact;
  else
    cert.certified = cert.norm_p.value <= cert.norm_r.value + 1e-12;
  return cert;
}

Scalar pairing(const DyadicStep& f, const DyadicStep& g, Exponent p, Exponent q) {
  if (p.inf || q.inf || p.is_one() || q.is_one())
    throw error("pairing exponents must lie strictly between 1 and inf");
  if (!conjugate_pair(p, q)) throw error("non-conjugate exponents");
  return integrate(pointwise_mul(f, g));
}

Mat juxtapose_hom(const Mat& phi1, const Mat& phi2) {
  if (phi1.rows != phi1.cols || phi2.rows != phi2.cols || phi1.rows != phi2.rows)
    throw error("operator shape mismatch");
  return block_diag(phi1, phi2);
}

double sampled_operator_norm(const Mat& m, Exponent in_p, int in_level, Exponent out_p,
                             int out_level, int samples, uint64_t seed,
                             const std::vector<Vec>& extra) {
  Rational win = div_pow2(Rational(1), in_level);
  Rational wout = div_pow2(Rational(1), out_level);
  double best = 0;
  auto consider = [&](const Vec& v) {
    if (v.size() != m.cols) throw error("operator shape mismatch");
    double in_norm = p_norm_uniform(v, win, in_p).value;
    if (in_norm <= 0) return;
    double out_norm = p_norm_uniform(mul(m, v), wout, out_p).value;
    double r = out_norm / in_norm;
    if (r > best) best = r;
  };
  for (const auto& v : extra) consider(v);
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    Vec v(m.cols);
    for (auto& x : v) x = random_scalar(rng, 8, 8);
    consider(v);
  }
  return best;
}

PNormValue sup_norm(const CylinderFunction& f) {
  return p_norm_unweighted(f.step.coeffs, Exponent::infinity());
}

CylinderFunction cantor_project(const CylinderFunction& f, int n) {
  if (n < 0) throw error("negative bit count");
  if (n >= f.step.level) return f;
  size_t block = size_t{1} << (f.step.level - n);
  std::vector<Scalar> cs(f.step.coeffs.size());
  for (size_t b = 0; b < cs.size(); b += block) {
    const Scalar& head = f.step.coeffs[b];
    for (size_t i = 0; i < block; ++i) cs[b + i] = head;
  }
  return CylinderFunction(DyadicStep(f.step.level, std::move(cs)));
}

DyadicStep cantor_to_interval(const CylinderFunction& f) { return f.step; }

CylinderFunction interval_to_cantor(const DyadicStep& f) { return CylinderFunction(f); }

AlgebraTarget mean_target(Exponent p) {
  AlgebraTarget t;
  t.name = "scalar-mean(p=" + to_string(p) + ")";
  t.dim = 1;
  t.p = p;
  t.basepoint = {Scalar(1)};
  t.delta = Mat{{Scalar(1, 2), Scalar(1, 2)}};
  t.norm = NormSpec::sup_norm();
  return t;
}

AlgebraTarget first_block_target() {
  AlgebraTarget t;
  t.name = "first-block";
  t.dim = 1;
  t.p = Exponent::infinity();
  t.basepoint = {Scalar(1)};
  t.delta = Mat{{Scalar(1), Scalar(0)}};
  t.norm = NormSpec::sup_norm();
  return t;
}

AlgebraTarget convex_scalar_target(Rational a) {
  AlgebraTarget t;
  t.name = "convex(" + to_string(a) + ")";
  t.dim = 1;
  t.p = Exponent::infinity();
  t.basepoint = {Scalar(1)};
  t.delta = Mat{{Scalar(a), Scalar(Rational(1) - a)}};
  t.norm = NormSpec::sup_norm();
  return t;
}

AlgebraTarget pair_mean_target() {
  AlgebraTarget t;
  t.name = "pair-mean";
  t.dim = 2;
  t.p = Exponent::of(1);
  t.basepoint = {Scalar(1), Scalar(1)};
  Mat d(2, 4);
  d.at(0, 0) = Scalar(1, 2);
  d.at(0, 2) = Scalar(1, 2);
  d.at(1, 1) = Scalar(1, 2);
  d.at(1, 3) = Scalar(1, 2);
  t.delta = d;
  t.norm = NormSpec::sup_norm();
  return t;
}

AlgebraTarget cumulative_target(int lvl) {
  if (lvl < 0 || lvl > max_level()) throw error("cumulative target level out of range");
  size_t n = size_t{1} << lvl;
  AlgebraTarget t;
  t.name = "cumulative(level=" + std::to_string(lvl) + ")";
  t.dim = static_cast<int>(n);
  t.p = Exponent::of(1);
  t.norm = NormSpec::sup_norm();
  // coordinates are node values at i/2^lvl for i = 1..2^lvl (node 0 pinned)
  t.basepoint.resize(n);
  for (size_t i = 1; i <= n; ++i)
    t.basepoint[i - 1] = Scalar(Rational::make(static_cast<int128>(i), static_cast<int128>(n)));
  Mat d(n, 2 * n);
  for (size_t i = 1; i <= n; ++i) {
    if (2 * i <= n) {
      d.at(i - 1, 2 * i - 1) = Scalar(1, 2);  // half of the left function at node 2i
    } else {
      d.at(i - 1, n - 1) = Scalar(1, 2);  // half of the left function's endpoint
      size_t k = 2 * i - n;               // right function's node index
      d.at(i - 1, n + k - 1) += Scalar(1, 2);
    }
  }
  t.delta = std::move(d);
  return t;
}

AlgebraTarget level_truncation_target(int lvl, Exponent p) {
  if (lvl < 0 || lvl + 1 > max_level()) throw error("truncation target level out of range");
  size_t n = size_t{1} << lvl;
  AlgebraTarget t;
  t.name = "level-truncation(level=" + std::to_string(lvl) + ",p=" + to_string(p) + ")";
  t.dim = static_cast<int>(n);
  t.p = p;
  t.norm = NormSpec::weighted(p, std::vector<Rational>(n, div_pow2(Rational(1), lvl)));
  t.basepoint.assign(n, Scalar(1));
  // assemble the two halves at level lvl+1, then average adjacent cells back down
  Mat d(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    d.at(i, 2 * i) = Scalar(1, 2);
    d.at(i, 2 * i + 1) = Scalar(1, 2);
  }
  t.delta = std::move(d);
  return t;
}

Vec indefinite_via_universal(const MorphismTable& cumulative_table, const DyadicStep& f) {
  return apply_universal(cumulative_table, f);
}

} // namespace ii
