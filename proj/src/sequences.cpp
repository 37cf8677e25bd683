#include "ii/sequences.hpp"

#include <sstream>

#include "ii/random.hpp"

namespace ii {

FiniteSeq trim(const FiniteSeq& a) {
  std::vector<Scalar> cs = a.coeffs;
  while (!cs.empty() && cs.back().is_zero()) cs.pop_back();
  return FiniteSeq(std::move(cs));
}

bool equal(const FiniteSeq& a, const FiniteSeq& b) {
  return trim(a).coeffs == trim(b).coeffs;
}

FiniteSeq seq_prepend(const Scalar& c, const FiniteSeq& a) {
  std::vector<Scalar> cs;
  cs.reserve(a.coeffs.size() + 1);
  cs.push_back(c);
  cs.insert(cs.end(), a.coeffs.begin(), a.coeffs.end());
  return FiniteSeq(std::move(cs));
}

FiniteSeq add(const FiniteSeq& a, const FiniteSeq& b) {
  std::vector<Scalar> cs(a.coeffs.size() > b.coeffs.size() ? a.coeffs.size() : b.coeffs.size());
  for (size_t i = 0; i < cs.size(); ++i) {
    if (i < a.coeffs.size()) cs[i] += a.coeffs[i];
    if (i < b.coeffs.size()) cs[i] += b.coeffs[i];
  }
  return FiniteSeq(std::move(cs));
}

FiniteSeq scale(const Scalar& c, const FiniteSeq& a) {
  std::vector<Scalar> cs(a.coeffs.size());
  for (size_t i = 0; i < cs.size(); ++i) cs[i] = c * a.coeffs[i];
  return FiniteSeq(std::move(cs));
}

PNormValue seq_norm(const FiniteSeq& a, Exponent p) {
  return p_norm_unweighted(a.coeffs, p);
}

Vec SeqTarget::apply_delta(const Scalar& c, const Vec& x) const {
  Vec in;
  in.reserve(1 + x.size());
  in.push_back(c);
  in.insert(in.end(), x.begin(), x.end());
  return mul(delta, in);
}

namespace {

// The head coordinate always carries the plain field norm, so the exact dual
// gate only applies when the target norm on dim 1 is |.| as well.
bool norm_is_plain_abs(const NormSpec& n) {
  switch (n.kind) {
    case NormSpec::Kind::sup:
    case NormSpec::Kind::euclidean:
      return true;
    case NormSpec::Kind::weighted_p:
      return n.weights.empty() || (n.weights.size() == 1 && n.weights[0] == Rational(1));
    default:
      return false;
  }
}

// |(a,b)|_q <= 1 decided exactly for q in {1, 2, inf}; -1 when undecidable
int exact_seq_gate(const Scalar& a, const Scalar& b, Exponent p) {
  Exponent q = p.conjugate();
  if (q.is_one()) {
    auto aa = a.abs_rational(), ab = b.abs_rational();
    if (!aa || !ab) return -1;
    return *aa + *ab <= Rational(1) ? 1 : 0;
  }
  if (q.is_integer() && q.as_integer() == 2) {
    return a.abs2() + b.abs2() <= Rational(1) ? 1 : 0;
  }
  if (q.inf) {
    auto aa = a.abs_rational(), ab = b.abs_rational();
    if (!aa || !ab) return -1;
    return max(*aa, *ab) <= Rational(1) ? 1 : 0;
  }
  return -1;
}

} // namespace

void validate_seq_target(const SeqTarget& t, const GateOptions& opt) {
  if (t.dim < 1) throw error("target dimension must be positive");
  if (t.delta.rows != static_cast<size_t>(t.dim) ||
      t.delta.cols != static_cast<size_t>(t.dim) + 1)
    throw error("delta must be dim x (1 + dim)");

  if (t.dim == 1 && norm_is_plain_abs(t.norm)) {
    int g = exact_seq_gate(t.delta.at(0, 0), t.delta.at(0, 1), t.p);
    if (g == 0)
      throw error("target axiom violated: delta is not a contraction (witness: unit basis pair)");
    if (g == 1) return;
  }

  Rng rng(opt.seed);
  for (int s = 0; s < opt.samples; ++s) {
    Scalar c = random_scalar(rng, 4, 4);
    Vec x(t.dim);
    for (auto& v : x) v = random_scalar(rng, 4, 4);
    double in = pair_power_combine(c.abs_double(), t.norm.eval(x).value, t.p,
                                   /*weighted=*/false);
    if (in <= 0) continue;
    PNormValue out = t.norm.eval(t.apply_delta(c, x));
    if (out.value > in * (1 + opt.tol) + opt.tol) {
      std::ostringstream os;
      os << "target axiom violated: delta is not a contraction (witness c=" << to_string(c)
         << " x=[";
      for (size_t i = 0; i < x.size(); ++i) os << (i ? "," : "") << to_string(x[i]);
      os << "])";
      throw error(os.str());
    }
  }
}

SeqMorphismTable compile_seq_universal(const SeqTarget& t, int max_len, const GateOptions& opt) {
  validate_seq_target(t, opt);
  if (max_len < 1) throw error("table length must be at least 1");

  SeqMorphismTable table;
  table.target = t;

  Mat head_col(t.dim, 1);
  for (int i = 0; i < t.dim; ++i) head_col.at(i, 0) = t.delta.at(i, 0);
  table.prefixes.push_back(head_col);  // length 1: a0 -> delta(a0, 0)

  Mat tail(t.dim, t.dim);
  for (int i = 0; i < t.dim; ++i)
    for (int j = 0; j < t.dim; ++j) tail.at(i, j) = t.delta.at(i, j + 1);

  for (int n = 1; n < max_len; ++n) {
    const Mat& prev = table.prefixes.back();
    table.prefixes.push_back(hcat(head_col, mul(tail, prev)));
  }
  return table;
}

Vec apply_seq_universal(const SeqMorphismTable& table, const FiniteSeq& a) {
  FiniteSeq c = trim(a);
  if (c.coeffs.empty()) return Vec(static_cast<size_t>(table.target.dim));
  if (static_cast<int>(c.coeffs.size()) > table.top_length())
    throw error("sequence length exceeds compiled table; recompile with a higher length");
  return mul(table.prefixes[c.coeffs.size() - 1], c.coeffs);
}

Vec seq_universal(const SeqTarget& t, const FiniteSeq& a, const GateOptions& opt) {
  FiniteSeq c = trim(a);
  if (c.coeffs.empty()) {
    validate_seq_target(t, opt);
    return Vec(static_cast<size_t>(t.dim));
  }
  return apply_seq_universal(compile_seq_universal(t, static_cast<int>(c.coeffs.size()), opt), c);
}

} // namespace ii
