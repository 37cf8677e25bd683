#include "ii/dyadic.hpp"

#include "ii/error.hpp"

namespace ii {

namespace {

void check_level(int lvl) {
  if (lvl < 0) throw error("negative dyadic level");
  if (lvl > max_level()) throw error("dyadic level exceeds configured cap");
}

} // namespace

DyadicStep::DyadicStep(int lvl, std::vector<Scalar> cs) : level(lvl), coeffs(std::move(cs)) {
  check_level(lvl);
  if (coeffs.size() != (size_t{1} << level)) throw error("coefficient count is not 2^level");
}

DyadicStep unit_step() { return constant_step(Scalar(1)); }

DyadicStep constant_step(const Scalar& c) { return DyadicStep(0, {c}); }

DyadicStep zero_step() { return constant_step(Scalar(0)); }

DyadicStep refine(const DyadicStep& f, int m) {
  if (m < f.level) throw error("cannot coarsen by refine");
  check_level(m);
  if (m == f.level) return f;
  size_t reps = size_t{1} << (m - f.level);
  std::vector<Scalar> out;
  out.reserve(f.coeffs.size() * reps);
  for (const auto& c : f.coeffs)
    for (size_t r = 0; r < reps; ++r) out.push_back(c);
  return DyadicStep(m, std::move(out));
}

DyadicStep canonicalize(const DyadicStep& f) {
  std::vector<Scalar> cur = f.coeffs;
  int lvl = f.level;
  while (lvl > 0) {
    bool collapsible = true;
    for (size_t i = 0; i + 1 < cur.size(); i += 2) {
      if (cur[i] != cur[i + 1]) {
        collapsible = false;
        break;
      }
    }
    if (!collapsible) break;
    std::vector<Scalar> half(cur.size() / 2);
    for (size_t i = 0; i < half.size(); ++i) half[i] = cur[2 * i];
    cur = std::move(half);
    --lvl;
  }
  return DyadicStep(lvl, std::move(cur));
}

bool is_canonical(const DyadicStep& f) {
  if (f.level == 0) return true;
  for (size_t i = 0; i + 1 < f.coeffs.size(); i += 2)
    if (f.coeffs[i] != f.coeffs[i + 1]) return true;
  return false;
}

bool equal(const DyadicStep& f, const DyadicStep& g) {
  DyadicStep cf = canonicalize(f);
  DyadicStep cg = canonicalize(g);
  return cf.level == cg.level && cf.coeffs == cg.coeffs;
}

DyadicStep juxtapose(const DyadicStep& f, const DyadicStep& g) {
  int common = f.level > g.level ? f.level : g.level;
  check_level(common + 1);
  DyadicStep rf = refine(f, common);
  DyadicStep rg = refine(g, common);
  std::vector<Scalar> out;
  out.reserve(rf.coeffs.size() * 2);
  out.insert(out.end(), rf.coeffs.begin(), rf.coeffs.end());
  out.insert(out.end(), rg.coeffs.begin(), rg.coeffs.end());
  return DyadicStep(common + 1, std::move(out));
}

std::pair<DyadicStep, DyadicStep> split(const DyadicStep& f) {
  DyadicStep rf = f.level >= 1 ? f : refine(f, 1);
  size_t half = rf.coeffs.size() / 2;
  std::vector<Scalar> left(rf.coeffs.begin(), rf.coeffs.begin() + half);
  std::vector<Scalar> right(rf.coeffs.begin() + half, rf.coeffs.end());
  return {DyadicStep(rf.level - 1, std::move(left)), DyadicStep(rf.level - 1, std::move(right))};
}

namespace {

template <class Op>
DyadicStep zip(const DyadicStep& f, const DyadicStep& g, Op op) {
  int common = f.level > g.level ? f.level : g.level;
  DyadicStep rf = refine(f, common);
  DyadicStep rg = refine(g, common);
  std::vector<Scalar> out(rf.coeffs.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = op(rf.coeffs[i], rg.coeffs[i]);
  return DyadicStep(common, std::move(out));
}

} // namespace

DyadicStep add(const DyadicStep& f, const DyadicStep& g) {
  return zip(f, g, [](const Scalar& a, const Scalar& b) { return a + b; });
}

DyadicStep sub(const DyadicStep& f, const DyadicStep& g) {
  return zip(f, g, [](const Scalar& a, const Scalar& b) { return a - b; });
}

DyadicStep scale(const Scalar& c, const DyadicStep& f) {
  std::vector<Scalar> out(f.coeffs.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = c * f.coeffs[i];
  return DyadicStep(f.level, std::move(out));
}

DyadicStep pointwise_mul(const DyadicStep& f, const DyadicStep& g) {
  return zip(f, g, [](const Scalar& a, const Scalar& b) { return a * b; });
}

DyadicStep conj(const DyadicStep& f) {
  std::vector<Scalar> out(f.coeffs.size());
  for (size_t i = 0; i < out.size(); ++i) out[i] = f.coeffs[i].conj();
  return DyadicStep(f.level, std::move(out));
}

PNormValue p_norm(const DyadicStep& f, Exponent p) {
  Rational w = div_pow2(Rational(1), f.level);
  return p_norm_uniform(f.coeffs, w, p);
}

Scalar integrate_exact(const DyadicStep& f) {
  Scalar sum;
  for (const auto& c : f.coeffs) sum += c;
  return div_pow2(sum, f.level);
}

} // namespace ii
