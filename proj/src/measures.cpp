#include "ii/measures.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <map>
#include <optional>
#include <sstream>

#include "ii/batch.hpp"
#include "ii/error.hpp"

namespace ii {

FiniteMeasureSpace::FiniteMeasureSpace(std::vector<std::string> pts, std::vector<Rational> ws)
    : points(std::move(pts)), weights(std::move(ws)) {
  if (points.size() != weights.size()) throw error("point/weight count mismatch");
  for (const auto& w : weights)
    if (w.is_negative()) throw error("negative weight");
  for (size_t i = 0; i < points.size(); ++i)
    for (size_t j = i + 1; j < points.size(); ++j)
      if (points[i] == points[j]) throw error("duplicate point name: " + points[i]);
}

Rational FiniteMeasureSpace::total() const {
  Rational t(0);
  for (const auto& w : weights) t += w;
  return t;
}

int FiniteMeasureSpace::index_of(const std::string& name) const {
  for (size_t i = 0; i < points.size(); ++i)
    if (points[i] == name) return static_cast<int>(i);
  return -1;
}

std::string FiniteMeasureSpace::key() const {
  std::string k;
  for (size_t i = 0; i < points.size(); ++i) {
    k += points[i];
    k += '=';
    k += to_string(weights[i]);
    k += ';';
  }
  return k;
}

FiniteMeasureSpace sub_space(const FiniteMeasureSpace& X, const std::vector<int>& indices) {
  std::vector<std::string> pts;
  std::vector<Rational> ws;
  pts.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || static_cast<size_t>(i) >= X.size()) throw error("subset index out of range");
    pts.push_back(X.points[static_cast<size_t>(i)]);
    ws.push_back(X.weights[static_cast<size_t>(i)]);
  }
  return FiniteMeasureSpace(std::move(pts), std::move(ws));
}

Embedding embedding_of_subset(const FiniteMeasureSpace& X, const std::vector<int>& indices) {
  Embedding e;
  e.from = sub_space(X, indices);
  e.into = X;
  e.image = indices;
  return e;
}

Embedding identity_embedding(const FiniteMeasureSpace& X) {
  std::vector<int> all(X.size());
  for (size_t i = 0; i < X.size(); ++i) all[i] = static_cast<int>(i);
  return embedding_of_subset(X, all);
}

Embedding compose(const Embedding& inner, const Embedding& outer) {
  if (!(inner.into == outer.from)) throw error("embeddings do not compose");
  Embedding e;
  e.from = inner.from;
  e.into = outer.into;
  e.image.reserve(inner.image.size());
  for (int k : inner.image) e.image.push_back(outer.image[static_cast<size_t>(k)]);
  return e;
}

PresMap make_pres_map(FiniteMeasureSpace from, FiniteMeasureSpace to_space, std::vector<int> to) {
  if (to.size() != from.size()) throw error("map length mismatch");
  std::vector<Rational> pushed(to_space.size(), Rational(0));
  for (size_t x = 0; x < to.size(); ++x) {
    if (to[x] < 0 || static_cast<size_t>(to[x]) >= to_space.size())
      throw error("map target out of range");
    pushed[static_cast<size_t>(to[x])] += from.weights[x];
  }
  for (size_t y = 0; y < to_space.size(); ++y)
    if (pushed[y] != to_space.weights[y]) throw error("map is not measure-preserving");
  PresMap s;
  s.from = std::move(from);
  s.to_space = std::move(to_space);
  s.to = std::move(to);
  return s;
}

PartialMap make_partial_unchecked(FiniteMeasureSpace source, FiniteMeasureSpace target,
                                  std::vector<int> domain, std::vector<int> map) {
  if (domain.size() != map.size()) throw error("domain/map length mismatch");
  std::vector<std::pair<int, int>> pairs(domain.size());
  for (size_t k = 0; k < domain.size(); ++k) pairs[k] = {domain[k], map[k]};
  std::sort(pairs.begin(), pairs.end());
  PartialMap f;
  f.source = std::move(source);
  f.target = std::move(target);
  f.domain.resize(pairs.size());
  f.map.resize(pairs.size());
  for (size_t k = 0; k < pairs.size(); ++k) {
    f.domain[k] = pairs[k].first;
    f.map[k] = pairs[k].second;
    if (k > 0 && f.domain[k] == f.domain[k - 1]) throw error("duplicate domain point");
    if (pairs[k].first < 0 || static_cast<size_t>(pairs[k].first) >= f.source.size())
      throw error("domain index out of range");
    if (pairs[k].second < 0 || static_cast<size_t>(pairs[k].second) >= f.target.size())
      throw error("map target out of range");
  }
  return f;
}

PartialMap make_partial(FiniteMeasureSpace source, FiniteMeasureSpace target,
                        std::vector<int> domain, std::vector<int> map) {
  PartialMap f = make_partial_unchecked(std::move(source), std::move(target), std::move(domain),
                                        std::move(map));
  std::vector<Rational> pushed(f.target.size(), Rational(0));
  for (size_t k = 0; k < f.domain.size(); ++k)
    pushed[static_cast<size_t>(f.map[k])] += f.source.weights[static_cast<size_t>(f.domain[k])];
  for (size_t y = 0; y < f.target.size(); ++y)
    if (pushed[y] != f.target.weights[y]) throw error("map is not measure-preserving");
  return f;
}

PartialMap identity_partial(const FiniteMeasureSpace& X) {
  std::vector<int> all(X.size());
  for (size_t i = 0; i < X.size(); ++i) all[i] = static_cast<int>(i);
  return make_partial(X, X, all, all);
}

PartialMap as_partial(const Embedding& e) {
  std::vector<int> domain = e.image;
  std::vector<int> map(e.image.size());
  for (size_t k = 0; k < e.image.size(); ++k) map[k] = static_cast<int>(k);
  return make_partial(e.into, e.from, std::move(domain), std::move(map));
}

PartialMap as_partial(const PresMap& s) {
  std::vector<int> domain(s.from.size());
  for (size_t i = 0; i < s.from.size(); ++i) domain[i] = static_cast<int>(i);
  return make_partial(s.from, s.to_space, std::move(domain), s.to);
}

PartialMap compose_partial(const PartialMap& f, const PartialMap& g) {
  if (!(f.target == g.source)) throw error("partial map spaces do not compose");
  std::vector<int> pos(g.source.size(), -1);
  for (size_t k = 0; k < g.domain.size(); ++k) pos[static_cast<size_t>(g.domain[k])] =
      static_cast<int>(k);
  std::vector<int> domain, map;
  for (size_t k = 0; k < f.domain.size(); ++k) {
    int mid = f.map[k];
    int p = pos[static_cast<size_t>(mid)];
    if (p < 0) continue;
    domain.push_back(f.domain[k]);
    map.push_back(g.map[static_cast<size_t>(p)]);
  }
  return make_partial(f.source, g.target, std::move(domain), std::move(map));
}

bool partial_maps_equal(const PartialMap& f, const PartialMap& g) {
  return f.source == g.source && f.target == g.target && f.domain == g.domain && f.map == g.map;
}

bool is_embedding(const PartialMap& f) {
  std::vector<bool> hit(f.target.size(), false);
  for (size_t k = 0; k < f.domain.size(); ++k) {
    size_t y = static_cast<size_t>(f.map[k]);
    if (hit[y]) return false;
    hit[y] = true;
    if (f.source.weights[static_cast<size_t>(f.domain[k])] != f.target.weights[y]) return false;
  }
  return true;
}

SimpleFn::SimpleFn(FiniteMeasureSpace sp, Vec vals) : space(std::move(sp)), values(std::move(vals)) {
  if (values.size() != space.size()) throw error("value count does not match point count");
}

SimpleFn unit_fn(const FiniteMeasureSpace& X) { return SimpleFn(X, Vec(X.size(), Scalar(1))); }

SimpleFn indicator_fn(const FiniteMeasureSpace& X, const std::vector<int>& indices) {
  Vec vals(X.size());
  for (int i : indices) {
    if (i < 0 || static_cast<size_t>(i) >= X.size()) throw error("subset index out of range");
    vals[static_cast<size_t>(i)] = Scalar(1);
  }
  return SimpleFn(X, std::move(vals));
}

bool ae_equal(const SimpleFn& f, const SimpleFn& g) {
  if (!(f.space == g.space)) return false;
  for (size_t i = 0; i < f.values.size(); ++i)
    if (!f.space.weights[i].is_zero() && f.values[i] != g.values[i]) return false;
  return true;
}

SimpleFn add(const SimpleFn& f, const SimpleFn& g) {
  if (!(f.space == g.space)) throw error("functions live on different spaces");
  return SimpleFn(f.space, f.values + g.values);
}

SimpleFn scale(const Scalar& c, const SimpleFn& f) { return SimpleFn(f.space, c * f.values); }

SimpleFn pullback(const PartialMap& f, const SimpleFn& g) {
  if (!(g.space == f.target)) throw error("pullback function lives on the wrong space");
  Vec vals(f.source.size());
  for (size_t k = 0; k < f.domain.size(); ++k)
    vals[static_cast<size_t>(f.domain[k])] = g.values[static_cast<size_t>(f.map[k])];
  return SimpleFn(f.source, std::move(vals));
}

PNormValue p_norm(const SimpleFn& f, Exponent p) {
  return p_norm_impl(
      f.values.size(), [&](size_t i) { return f.values[i]; },
      [&](size_t i) { return f.space.weights[i]; }, p);
}

Scalar integrate(const SimpleFn& f) {
  Scalar sum;
  for (size_t i = 0; i < f.values.size(); ++i)
    if (!f.space.weights[i].is_zero()) sum += f.values[i] * Scalar(f.space.weights[i]);
  return sum;
}

PNormValue tv_norm(const SignedMeasure& nu) {
  return p_norm_unweighted(nu.mass, Exponent::of(1));
}

SignedMeasure density_measure(const SimpleFn& f) {
  SignedMeasure nu;
  nu.space = f.space;
  nu.mass.resize(f.values.size());
  for (size_t i = 0; i < f.values.size(); ++i) nu.mass[i] = f.values[i] * Scalar(f.space.weights[i]);
  return nu;
}

Scalar inner_product(const SimpleFn& f, const SimpleFn& g) {
  if (!(f.space == g.space)) throw error("functions live on different spaces");
  Scalar sum;
  for (size_t i = 0; i < f.values.size(); ++i)
    if (!f.space.weights[i].is_zero())
      sum += f.values[i] * g.values[i].conj() * Scalar(f.space.weights[i]);
  return sum;
}

Scalar FunctorTarget::inner(const FiniteMeasureSpace&, const Vec&, const Vec&) const {
  throw error("target has no inner product");
}

bool FunctorTarget::is_zero_elem(const FiniteMeasureSpace&, const Vec& v) const {
  return vec_is_zero(v);
}

bool FunctorTarget::equal_elem(const FiniteMeasureSpace& X, const Vec& a, const Vec& b) const {
  if (a.size() != b.size()) return false;
  return is_zero_elem(X, a - b);
}

Vec FunctorTarget::unit_of_subset(const FiniteMeasureSpace& X,
                                  const std::vector<int>& indices) const {
  Embedding e = embedding_of_subset(X, indices);
  return mul(act_embed(e), unit_element(e.from));
}

namespace {

Mat extension_matrix(const Embedding& e) {
  Mat m(e.into.size(), e.from.size());
  for (size_t k = 0; k < e.image.size(); ++k) m.at(static_cast<size_t>(e.image[k]), k) = Scalar(1);
  return m;
}

Mat pullback_matrix(const PresMap& s) {
  Mat m(s.from.size(), s.to_space.size());
  for (size_t x = 0; x < s.to.size(); ++x) m.at(x, static_cast<size_t>(s.to[x])) = Scalar(1);
  return m;
}

struct FieldTotalTarget final : FunctorTarget {
  std::string name() const override { return "field-total"; }
  Exponent p() const override { return Exponent::of(1); }
  bool has_pres_action() const override { return true; }
  size_t dim(const FiniteMeasureSpace&) const override { return 1; }
  Vec unit_element(const FiniteMeasureSpace& X) const override { return {Scalar(X.total())}; }
  Mat act_embed(const Embedding&) const override { return Mat::identity(1); }
  Mat act_pres(const PresMap&) const override { return Mat::identity(1); }
  PNormValue norm(const FiniteMeasureSpace&, const Vec& v) const override {
    return p_norm_unweighted(v, Exponent::infinity());
  }
};

struct SimpleLpTarget : FunctorTarget {
  Exponent exponent;
  explicit SimpleLpTarget(Exponent e) : exponent(e) {}

  std::string name() const override { return "simple-functions(p=" + to_string(exponent) + ")"; }
  Exponent p() const override { return exponent; }
  bool has_pres_action() const override { return true; }
  bool is_hilbert() const override { return exponent.is_integer() && exponent.as_integer() == 2; }
  size_t dim(const FiniteMeasureSpace& X) const override { return X.size(); }
  Vec unit_element(const FiniteMeasureSpace& X) const override {
    return Vec(X.size(), Scalar(1));
  }
  Mat act_embed(const Embedding& e) const override { return extension_matrix(e); }
  Mat act_pres(const PresMap& s) const override { return pullback_matrix(s); }
  PNormValue norm(const FiniteMeasureSpace& X, const Vec& v) const override {
    return p_norm_impl(
        v.size(), [&](size_t i) { return v[i]; }, [&](size_t i) { return X.weights[i]; },
        exponent);
  }
  Scalar inner(const FiniteMeasureSpace& X, const Vec& a, const Vec& b) const override {
    Scalar sum;
    for (size_t i = 0; i < a.size(); ++i)
      if (!X.weights[i].is_zero()) sum += a[i] * b[i].conj() * Scalar(X.weights[i]);
    return sum;
  }
  bool is_zero_elem(const FiniteMeasureSpace& X, const Vec& v) const override {
    for (size_t i = 0; i < v.size(); ++i)
      if (!X.weights[i].is_zero() && !v[i].is_zero()) return false;
    return true;
  }
};

struct MeasuresTarget final : FunctorTarget {
  std::string name() const override { return "signed-measures"; }
  Exponent p() const override { return Exponent::of(1); }
  bool has_pres_action() const override { return false; }
  size_t dim(const FiniteMeasureSpace& X) const override { return X.size(); }
  Vec unit_element(const FiniteMeasureSpace& X) const override {
    Vec v(X.size());
    for (size_t i = 0; i < X.size(); ++i) v[i] = Scalar(X.weights[i]);
    return v;
  }
  Mat act_embed(const Embedding& e) const override { return extension_matrix(e); }
  Mat act_pres(const PresMap&) const override {
    throw error("target has no action on measure-preserving maps");
  }
  PNormValue norm(const FiniteMeasureSpace&, const Vec& v) const override {
    return p_norm_unweighted(v, Exponent::of(1));
  }
};

// Deterministic exactly-orthogonal rational matrix keyed by the space and a
// run seed: a short product of Pythagorean rotations and sign flips.
Mat twist_matrix(const FiniteMeasureSpace& X, uint64_t seed) {
  size_t n = X.size();
  Mat u = Mat::identity(n);
  if (n == 0) return u;
  uint64_t h = 1469598103934665603ull ^ seed;
  for (char c : X.key()) h = (h ^ static_cast<unsigned char>(c)) * 1099511628211ull;
  Rng rng(h);
  for (size_t i = 0; i < n; ++i)
    if (rng.chance(1, 2))
      for (size_t j = 0; j < n; ++j) u.at(i, j) = -u.at(i, j);
  if (n >= 2) {
    static const int triples[2][3] = {{3, 4, 5}, {5, 12, 13}};
    int rotations = static_cast<int>(std::min<size_t>(n, 4));
    for (int r = 0; r < rotations; ++r) {
      size_t i = static_cast<size_t>(rng.range(0, static_cast<long long>(n) - 1));
      size_t j = static_cast<size_t>(rng.range(0, static_cast<long long>(n) - 2));
      if (j >= i) ++j;
      const int* t = triples[rng.range(0, 1)];
      Scalar c(Rational(t[0], t[2]));
      Scalar s(Rational(t[1], t[2]));
      for (size_t k = 0; k < n; ++k) {
        Scalar a = u.at(i, k), b = u.at(j, k);
        u.at(i, k) = c * a - s * b;
        u.at(j, k) = s * a + c * b;
      }
    }
  }
  return u;
}

struct HilbertTwistTarget final : FunctorTarget {
  uint64_t seed;
  explicit HilbertTwistTarget(uint64_t s) : seed(s) {}

  std::string name() const override { return "hilbert-twist(seed=" + std::to_string(seed) + ")"; }
  Exponent p() const override { return Exponent::of(2); }
  bool has_pres_action() const override { return true; }
  bool is_hilbert() const override { return true; }
  size_t dim(const FiniteMeasureSpace& X) const override { return X.size(); }
  Vec unit_element(const FiniteMeasureSpace& X) const override {
    return mul(twist_matrix(X, seed), Vec(X.size(), Scalar(1)));
  }
  Mat act_embed(const Embedding& e) const override {
    return mul(twist_matrix(e.into, seed),
               mul(extension_matrix(e), transpose(twist_matrix(e.from, seed))));
  }
  Mat act_pres(const PresMap& s) const override {
    return mul(twist_matrix(s.from, seed),
               mul(pullback_matrix(s), transpose(twist_matrix(s.to_space, seed))));
  }
  Vec untwist(const FiniteMeasureSpace& X, const Vec& v) const {
    return mul(transpose(twist_matrix(X, seed)), v);
  }
  PNormValue norm(const FiniteMeasureSpace& X, const Vec& v) const override {
    Vec plain = untwist(X, v);
    return p_norm_impl(
        plain.size(), [&](size_t i) { return plain[i]; }, [&](size_t i) { return X.weights[i]; },
        Exponent::of(2));
  }
  Scalar inner(const FiniteMeasureSpace& X, const Vec& a, const Vec& b) const override {
    Vec pa = untwist(X, a), pb = untwist(X, b);
    Scalar sum;
    for (size_t i = 0; i < pa.size(); ++i)
      if (!X.weights[i].is_zero()) sum += pa[i] * pb[i].conj() * Scalar(X.weights[i]);
    return sum;
  }
  bool is_zero_elem(const FiniteMeasureSpace& X, const Vec& v) const override {
    Vec plain = untwist(X, v);
    for (size_t i = 0; i < plain.size(); ++i)
      if (!X.weights[i].is_zero() && !plain[i].is_zero()) return false;
    return true;
  }
};

struct ScaledUnitTarget final : SimpleLpTarget {
  Rational factor;
  ScaledUnitTarget(Rational c, Exponent e) : SimpleLpTarget(e), factor(c) {}
  std::string name() const override {
    return "scaled-unit(c=" + to_string(factor) + ",p=" + to_string(exponent) + ")";
  }
  Vec unit_element(const FiniteMeasureSpace& X) const override {
    return Vec(X.size(), Scalar(factor));
  }
};

struct NonAdditiveUnitTarget final : SimpleLpTarget {
  NonAdditiveUnitTarget() : SimpleLpTarget(Exponent::of(1)) {}
  std::string name() const override { return "nonadditive-unit"; }
  Vec unit_element(const FiniteMeasureSpace& X) const override {
    return Vec(X.size(), Scalar(X.total()));
  }
};

} // namespace

FunctorTargetPtr field_total_target() { return std::make_shared<FieldTotalTarget>(); }
FunctorTargetPtr simple_lp_target(Exponent p) { return std::make_shared<SimpleLpTarget>(p); }
FunctorTargetPtr measures_target() { return std::make_shared<MeasuresTarget>(); }
FunctorTargetPtr hilbert_twist_target(uint64_t seed) {
  return std::make_shared<HilbertTwistTarget>(seed);
}
FunctorTargetPtr scaled_unit_target(Rational c, Exponent p) {
  return std::make_shared<ScaledUnitTarget>(c, p);
}
FunctorTargetPtr nonadditive_unit_target() { return std::make_shared<NonAdditiveUnitTarget>(); }

Vec universal_map(const FunctorTarget& t, const SimpleFn& f) {
  std::map<std::pair<std::string, std::string>, std::vector<int>> fibres;
  for (size_t i = 0; i < f.values.size(); ++i) {
    const Scalar& c = f.values[i];
    if (c.is_zero()) continue;
    fibres[{to_string(c.re), to_string(c.im)}].push_back(static_cast<int>(i));
  }
  Vec out(t.dim(f.space));
  for (const auto& [cname, indices] : fibres) {
    const Scalar& c = f.values[static_cast<size_t>(indices.front())];
    out = out + c * t.unit_of_subset(f.space, indices);
  }
  return out;
}

namespace {

std::string format_space(const FiniteMeasureSpace& X) {
  std::string s = "{";
  for (size_t i = 0; i < X.size(); ++i) {
    if (i) s += ",";
    s += X.points[i] + ":" + to_string(X.weights[i]);
  }
  return s + "}";
}

std::string format_indices(const FiniteMeasureSpace& X, const std::vector<int>& idx) {
  std::string s = "[";
  for (size_t k = 0; k < idx.size(); ++k) {
    if (k) s += ",";
    s += X.points[static_cast<size_t>(idx[k])];
  }
  return s + "]";
}

double measure_pow(const Rational& total, Exponent p) {
  if (p.inf) return total.is_zero() ? 0.0 : 1.0;
  return std::pow(total.to_double(), 1.0 / p.value());
}

// All subsets of {0..n-1}; n stays <= 8 for generated spaces.
std::vector<std::vector<int>> all_subsets(size_t n) {
  std::vector<std::vector<int>> out;
  for (size_t mask = 0; mask < (size_t{1} << n); ++mask) {
    std::vector<int> s;
    for (size_t i = 0; i < n; ++i)
      if (mask & (size_t{1} << i)) s.push_back(static_cast<int>(i));
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> complement_of(size_t n, const std::vector<int>& s) {
  std::vector<bool> in(n, false);
  for (int i : s) in[static_cast<size_t>(i)] = true;
  std::vector<int> out;
  for (size_t i = 0; i < n; ++i)
    if (!in[i]) out.push_back(static_cast<int>(i));
  return out;
}

// deterministic re-finder for shrunk counterexamples
std::optional<std::pair<std::vector<int>, std::vector<int>>> find_partition_violation(
    const FunctorTarget& t, const FiniteMeasureSpace& X) {
  Vec vx = t.unit_element(X);
  for (const auto& y : all_subsets(X.size())) {
    std::vector<int> z = complement_of(X.size(), y);
    Vec sum = t.unit_of_subset(X, y) + t.unit_of_subset(X, z);
    if (!t.equal_elem(X, sum, vx)) return std::make_pair(y, z);
  }
  return std::nullopt;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> find_orthogonality_violation(
    const FunctorTarget& t, const FiniteMeasureSpace& X) {
  auto subs = all_subsets(X.size());
  for (const auto& y : subs) {
    std::vector<bool> in(X.size(), false);
    for (int i : y) in[static_cast<size_t>(i)] = true;
    for (const auto& z : subs) {
      bool disjoint = true;
      for (int i : z)
        if (in[static_cast<size_t>(i)]) {
          disjoint = false;
          break;
        }
      if (!disjoint) continue;
      Scalar ip = t.inner(X, t.unit_of_subset(X, y), t.unit_of_subset(X, z));
      if (!ip.is_zero()) return std::make_pair(y, z);
    }
  }
  return std::nullopt;
}

template <class Fails>
FiniteMeasureSpace shrink_space(FiniteMeasureSpace X, Fails&& fails) {
  auto rank = [](const Rational& w) {
    if (w.is_zero()) return 0;
    if (w == Rational(1)) return 1;
    return 2;
  };
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < X.size() && !changed; ++i) {
      std::vector<int> keep;
      for (size_t j = 0; j < X.size(); ++j)
        if (j != i) keep.push_back(static_cast<int>(j));
      FiniteMeasureSpace cand = sub_space(X, keep);
      if (fails(cand)) {
        X = cand;
        changed = true;
      }
    }
    // weights only ever move to strictly simpler values
    for (size_t i = 0; i < X.size() && !changed; ++i) {
      for (Rational w : {Rational(0), Rational(1)}) {
        if (rank(w) >= rank(X.weights[i])) continue;
        FiniteMeasureSpace cand = X;
        cand.weights[i] = w;
        if (fails(cand)) {
          X = cand;
          changed = true;
          break;
        }
      }
    }
  }
  return X;
}

} // namespace

AxiomReport verify_axioms(const FunctorTarget& t, int trials, uint64_t seed,
                          const AxiomOptions& opt) {
  AxiomReport rep;
  rep.trials = static_cast<size_t>(trials);
  std::atomic<size_t> checks{0};

  BatchOptions bopt;
  bopt.parallel = opt.parallel;
  bopt.max_kept_failures = opt.max_kept_failures;
  BatchResult res = run_batch(
      static_cast<size_t>(trials), seed,
      [&](size_t, Rng& rng) -> std::optional<Failure> {
        FiniteMeasureSpace X = random_space(rng);
        size_t local_checks = 0;
        auto fail = [&](std::string anchor, std::string message,
                        std::string payload) -> std::optional<Failure> {
          Failure f;
          f.anchor = std::move(anchor);
          f.message = std::move(message);
          f.payload = std::move(payload);
          checks += local_checks;
          return f;
        };

        // additivity of the distinguished elements over a partition
        auto [yi, zi] = random_partition(rng, X.size());
        ++local_checks;
        Vec sum = t.unit_of_subset(X, yi) + t.unit_of_subset(X, zi);
        if (!t.equal_elem(X, sum, t.unit_element(X))) {
          FiniteMeasureSpace shrunk = shrink_space(
              X, [&](const FiniteMeasureSpace& c) { return find_partition_violation(t, c).has_value(); });
          auto parts = find_partition_violation(t, shrunk);
          std::string payload = format_space(shrunk);
          if (parts)
            payload += " parts " + format_indices(shrunk, parts->first) + " " +
                       format_indices(shrunk, parts->second);
          return fail("partition_additivity",
                      "distinguished elements are not additive over a partition", payload);
        }

        // invariance under a quotient map
        if (t.has_pres_action()) {
          PresMap s = random_quotient(rng, X);
          ++local_checks;
          Vec mapped = mul(t.act_pres(s), t.unit_element(s.to_space));
          if (!t.equal_elem(X, mapped, t.unit_element(X)))
            return fail("pres_invariance",
                        "distinguished element not preserved under a measure-preserving map",
                        format_space(X));
        }

        // norm bound for the distinguished element
        ++local_checks;
        double bound = measure_pow(X.total(), t.p());
        double got = t.norm(X, t.unit_element(X)).value;
        if (got > bound + opt.tol || (opt.check_attainment && std::fabs(got - bound) > opt.tol)) {
          FiniteMeasureSpace shrunk = shrink_space(X, [&](const FiniteMeasureSpace& c) {
            double b = measure_pow(c.total(), t.p());
            double g = t.norm(c, t.unit_element(c)).value;
            return g > b + opt.tol || (opt.check_attainment && std::fabs(g - b) > opt.tol);
          });
          return fail("norm_bound", "distinguished element norm exceeds the measure bound",
                      format_space(shrunk));
        }

        if (t.is_hilbert()) {
          // orthogonality of disjoint-subset elements, exact
          auto ys = random_subset(rng, X.size());
          auto rest = complement_of(X.size(), ys);
          auto zs = random_subset(rng, rest.size());
          std::vector<int> z2;
          for (int k : zs) z2.push_back(rest[static_cast<size_t>(k)]);
          ++local_checks;
          Scalar ip = t.inner(X, t.unit_of_subset(X, ys), t.unit_of_subset(X, z2));
          if (!ip.is_zero()) {
            FiniteMeasureSpace shrunk = shrink_space(X, [&](const FiniteMeasureSpace& c) {
              return find_orthogonality_violation(t, c).has_value();
            });
            return fail("orthogonality", "disjoint-subset elements are not orthogonal",
                        format_space(shrunk));
          }
        } else {
          // norm of an assembled pair against the unweighted pair norm
          Embedding ey = embedding_of_subset(X, yi);
          Embedding ez = embedding_of_subset(X, zi);
          Vec u(t.dim(ey.from)), w(t.dim(ez.from));
          for (auto& x : u) x = random_scalar(rng, 4, 4);
          for (auto& x : w) x = random_scalar(rng, 4, 4);
          ++local_checks;
          Vec assembled = mul(t.act_embed(ey), u) + mul(t.act_embed(ez), w);
          double lhs = t.norm(X, assembled).value;
          double rhs = pair_power_combine(t.norm(ey.from, u).value, t.norm(ez.from, w).value,
                                          t.p(), /*weighted=*/false);
          if (lhs > rhs + opt.tol)
            return fail("direct_sum_bound", "assembled pair norm exceeds the pair combination",
                        format_space(X) + " parts " + format_indices(X, yi) + " " +
                            format_indices(X, zi));
        }
        checks += local_checks;
        return std::nullopt;
      },
      bopt);

  rep.checks = checks.load();
  rep.failure_count = res.failure_count;
  rep.findings = std::move(res.failures);
  return rep;
}

bool check_beck_chevalley(const FunctorTarget& t, const PresMap& s, const std::vector<int>& B) {
  std::vector<bool> inB(s.to_space.size(), false);
  for (int b : B) {
    if (b < 0 || static_cast<size_t>(b) >= s.to_space.size())
      throw error("subset index out of range");
    inB[static_cast<size_t>(b)] = true;
  }
  std::vector<int> preimage;
  for (size_t x = 0; x < s.from.size(); ++x)
    if (inB[static_cast<size_t>(s.to[x])]) preimage.push_back(static_cast<int>(x));

  Embedding i = embedding_of_subset(s.from, preimage);
  Embedding j = embedding_of_subset(s.to_space, B);

  std::vector<int> pos_in_B(s.to_space.size(), -1);
  for (size_t k = 0; k < B.size(); ++k) pos_in_B[static_cast<size_t>(B[k])] = static_cast<int>(k);
  std::vector<int> restricted(preimage.size());
  for (size_t k = 0; k < preimage.size(); ++k)
    restricted[k] = pos_in_B[static_cast<size_t>(s.to[static_cast<size_t>(preimage[k])])];
  PresMap s_restricted = make_pres_map(i.from, j.from, restricted);

  Mat lhs = mul(t.act_embed(i), t.act_pres(s_restricted));
  Mat rhs = mul(t.act_pres(s), t.act_embed(j));
  return lhs == rhs;
}

bool check_additivity(const FunctorTarget& t, const FiniteMeasureSpace& X,
                      const std::vector<std::vector<int>>& parts) {
  std::vector<bool> seen(X.size(), false);
  std::vector<int> all;
  for (const auto& part : parts)
    for (int i : part) {
      if (i < 0 || static_cast<size_t>(i) >= X.size()) throw error("subset index out of range");
      if (seen[static_cast<size_t>(i)]) throw error("subsets are not pairwise disjoint");
      seen[static_cast<size_t>(i)] = true;
      all.push_back(i);
    }
  std::sort(all.begin(), all.end());
  Vec rhs(t.dim(X));
  for (const auto& part : parts) rhs = rhs + t.unit_of_subset(X, part);
  Vec lhs = t.unit_of_subset(X, all);
  if (parts.empty() && !t.is_zero_elem(X, lhs)) return false;
  return t.equal_elem(X, lhs, rhs);
}

bool agrees_with_universal_map(const FunctorTarget& t, const NaturalFamily& family,
                               const std::vector<FiniteMeasureSpace>& spaces) {
  for (const auto& X : spaces) {
    Mat M = family(X);
    if (M.rows != t.dim(X) || M.cols != X.size()) return false;
    SimpleFn unit = unit_fn(X);
    if (!t.equal_elem(X, mul(M, unit.values), t.unit_element(X))) return false;
    for (size_t k = 0; k < X.size(); ++k) {
      SimpleFn ind = indicator_fn(X, {static_cast<int>(k)});
      if (!t.equal_elem(X, mul(M, ind.values), universal_map(t, ind))) return false;
    }
  }
  return true;
}

FiniteMeasureSpace random_space(Rng& rng, int max_points) {
  int n = static_cast<int>(rng.range(0, max_points));
  std::vector<std::string> pts;
  std::vector<Rational> ws;
  for (int i = 0; i < n; ++i) {
    pts.push_back("p" + std::to_string(i));
    if (rng.chance(1, 4))
      ws.push_back(Rational(0));
    else
      ws.push_back(Rational(rng.range(1, 16), rng.range(1, 16)));
  }
  return FiniteMeasureSpace(std::move(pts), std::move(ws));
}

std::vector<int> random_subset(Rng& rng, size_t n) {
  std::vector<int> s;
  for (size_t i = 0; i < n; ++i)
    if (rng.chance(1, 2)) s.push_back(static_cast<int>(i));
  return s;
}

std::pair<std::vector<int>, std::vector<int>> random_partition(Rng& rng, size_t n) {
  std::vector<int> y, z;
  for (size_t i = 0; i < n; ++i)
    (rng.chance(1, 2) ? y : z).push_back(static_cast<int>(i));
  return {y, z};
}

PresMap random_quotient(Rng& rng, const FiniteMeasureSpace& X) {
  if (X.size() == 0) return make_pres_map(X, FiniteMeasureSpace(), {});
  int k = static_cast<int>(rng.range(1, static_cast<long long>(X.size())));
  std::vector<int> group(X.size());
  for (auto& g : group) g = static_cast<int>(rng.range(0, k - 1));
  // drop empty groups, renumber
  std::vector<int> remap(static_cast<size_t>(k), -1);
  int used = 0;
  for (int g : group)
    if (remap[static_cast<size_t>(g)] < 0) remap[static_cast<size_t>(g)] = used++;
  std::vector<Rational> ws(static_cast<size_t>(used), Rational(0));
  std::vector<std::string> pts;
  for (int q = 0; q < used; ++q) pts.push_back("q" + std::to_string(q));
  std::vector<int> to(X.size());
  for (size_t x = 0; x < X.size(); ++x) {
    to[x] = remap[static_cast<size_t>(group[x])];
    ws[static_cast<size_t>(to[x])] += X.weights[x];
  }
  return make_pres_map(X, FiniteMeasureSpace(std::move(pts), std::move(ws)), std::move(to));
}

SimpleFn random_simple_fn(Rng& rng, const FiniteMeasureSpace& X, int max_num, int max_den) {
  Vec vals(X.size());
  for (auto& v : vals) v = random_scalar(rng, max_num, max_den);
  return SimpleFn(X, std::move(vals));
}

} // namespace ii
