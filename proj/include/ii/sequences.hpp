#pragma once

#include <cstdint>
#include <vector>

#include "ii/matrix.hpp"
#include "ii/norms.hpp"
#include "ii/universal.hpp"

namespace ii {

// Finitely supported scalar sequence; entries beyond the stored prefix are
// zero. Canonical form trims trailing zeros.
struct FiniteSeq {
  std::vector<Scalar> coeffs;

  FiniteSeq() = default;
  explicit FiniteSeq(std::vector<Scalar> cs) : coeffs(std::move(cs)) {}

  size_t length() const { return coeffs.size(); }
};

FiniteSeq trim(const FiniteSeq& a);
bool equal(const FiniteSeq& a, const FiniteSeq& b);

FiniteSeq seq_prepend(const Scalar& c, const FiniteSeq& a);
FiniteSeq add(const FiniteSeq& a, const FiniteSeq& b);
FiniteSeq scale(const Scalar& c, const FiniteSeq& a);

// Unweighted p-norm (sum |a_k|^p)^(1/p); sup for p = inf.
PNormValue seq_norm(const FiniteSeq& a, Exponent p);

// Codomain for the unique morphism out of the finitely supported sequences:
// a normed space V with a map delta : F (+~)_p V -> V, encoded as a
// dim x (1 + dim) matrix on (head, tail-image) coordinates. p = inf selects
// the vanishing-at-infinity world.
struct SeqTarget {
  std::string name;
  int dim = 1;
  Exponent p = Exponent::of(1);
  Mat delta;  // dim x (1 + dim)
  NormSpec norm;

  Vec apply_delta(const Scalar& c, const Vec& x) const;
};

// Construction gate: exact sufficient condition |(a,b)|_q <= 1 for scalar
// targets when q in {1,2,inf}; sampled contraction certificate against the
// unweighted pair norm otherwise.
void validate_seq_target(const SeqTarget& t, const GateOptions& opt = {});

// Prefix-by-prefix matrix table: tables.prefix[n] is dim x (n+1) and sends
// length-(n+1) coefficient prefixes to target coordinates.
struct SeqMorphismTable {
  SeqTarget target;
  std::vector<Mat> prefixes;

  int top_length() const { return static_cast<int>(prefixes.size()); }
};

SeqMorphismTable compile_seq_universal(const SeqTarget& t, int max_len,
                                       const GateOptions& opt = {});

// Table route: prefixes[len-1] * coeffs. The empty sequence maps to zero.
Vec apply_seq_universal(const SeqMorphismTable& table, const FiniteSeq& a);

// One-shot convenience: compiles to the needed length and applies.
Vec seq_universal(const SeqTarget& t, const FiniteSeq& a, const GateOptions& opt = {});

} // namespace ii
