#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ii/dyadic.hpp"
#include "ii/matrix.hpp"
#include "ii/norms.hpp"

namespace ii {

// Norm on a finite-dimensional coefficient space. `dual_table` is a
// polyhedral norm given by a finite table of functionals:
// |x| = max_j |<row_j, x>|.
struct NormSpec {
  enum class Kind { weighted_p, euclidean, sup, dual_table };

  Kind kind = Kind::euclidean;
  Exponent p = Exponent::of(2);        // for weighted_p
  std::vector<Rational> weights;       // for weighted_p; empty = all ones
  Mat table;                           // for dual_table

  static NormSpec sup_norm() {
    NormSpec n;
    n.kind = Kind::sup;
    return n;
  }
  static NormSpec euclidean_norm() {
    NormSpec n;
    n.kind = Kind::euclidean;
    return n;
  }
  static NormSpec weighted(Exponent p, std::vector<Rational> ws = {}) {
    NormSpec n;
    n.kind = Kind::weighted_p;
    n.p = p;
    n.weights = std::move(ws);
    return n;
  }
  static NormSpec dual(Mat rows) {
    NormSpec n;
    n.kind = Kind::dual_table;
    n.table = std::move(rows);
    return n;
  }

  PNormValue eval(const Vec& x) const;
};

// A structured codomain for the universal morphism out of the dyadic step
// chain: a finite-dimensional normed space V, a unit-ball basepoint, and a
// binary contraction delta : V (+)_p V -> V fixing the basepoint, encoded as
// a dim x 2*dim matrix acting on concatenated coordinates.
struct AlgebraTarget {
  std::string name;
  int dim = 1;
  Exponent p = Exponent::of(1);
  Vec basepoint;
  Mat delta;
  NormSpec norm;
  bool allow_bounded = false;  // admit bounded non-contractions (outside the default category)

  Vec apply_delta(const Vec& u, const Vec& w) const { return mul(delta, concat(u, w)); }
};

struct GateOptions {
  int samples = 10000;
  uint64_t seed = 2024;
  double tol = 1e-9;
};

// Construction gate: basepoint in the unit ball, delta fixes it exactly, and
// delta passes the contraction certificate (exact for one-dimensional targets
// with p in {1,2,inf}, sampled on the unit sphere otherwise). Throws an error
// naming the violated axiom, with a shrunk witness where one exists.
void validate_target(const AlgebraTarget& t, const GateOptions& opt = {});

// Level-by-level matrix table of the unique structure-preserving map into a
// target: table.levels[n] is dim x 2^n and sends level-n coefficient vectors
// to target coordinates.
struct MorphismTable {
  AlgebraTarget target;
  std::vector<Mat> levels;

  int top_level() const { return static_cast<int>(levels.size()) - 1; }
};

// Unfolds the defining recursion: level 0 sends the unit step to the
// basepoint, and each next level is delta applied to the two halves.
// Validates the target first (see validate_target).
MorphismTable compile_universal(const AlgebraTarget& t, int max_lvl, const GateOptions& opt = {});

// levels[f.level] * coeffs(f); invariant under refine.
Vec apply_universal(const MorphismTable& table, const DyadicStep& f);

struct MorphismCheckFailure {
  std::string kind;
  std::string detail;
};

struct MorphismReport {
  size_t samples = 0;
  size_t failures = 0;
  std::vector<MorphismCheckFailure> findings;
  bool passed() const { return failures == 0; }
};

// Randomized morphism-law check on step pairs: the juxtaposition square
// commutes exactly, the basepoint is preserved exactly, and the map does not
// expand norms (float tolerance).
MorphismReport verify_morphism(const MorphismTable& table, int samples, uint64_t seed,
                               bool parallel = true);

// Desk-scale uniqueness: a candidate table is the morphism iff it matches the
// compiled recursion level by level, exactly. Shape mismatch is an error.
bool uniqueness_probe(const AlgebraTarget& t, const MorphismTable& candidate);

enum class ChainKind { double_with_p_norm, prepend_scalar };

struct ChainReport {
  ChainKind kind;
  Exponent p = Exponent::of(1);
  int stages = 0;
  std::vector<size_t> dims;
  bool connecting_isometries = true;   // each stage map preserves the norm exactly
  bool structure_map_invertible = true;  // assemble/split are mutually inverse matrices
  bool basepoint_coherent = true;      // stage basepoints map to stage basepoints
};

// Walks the free-construction chain of the doubling (or scalar-prepend)
// endofunctor and certifies the structure facts that make the colimit an
// initial algebra at every finite stage.
ChainReport adamek_chain(ChainKind kind, Exponent p, int stages);

// 2^n -> 2^(n+1) coefficient duplication; the level-n into level-(n+1)
// inclusion in matrix form.
Mat duplication_matrix(int n);

// Entry point for functions that are not dyadic steps: the caller supplies a
// cell sampler (level, cell index) -> value, and gets the level-n truncation
// together with the p-norm distance to the previous level - the computable
// stand-in for the density of the step chain. No convergence claim is made
// beyond the reported defect.
struct LevelApproximation {
  DyadicStep step;
  PNormValue defect;
};

LevelApproximation truncate_to_level(const std::function<Scalar(int, size_t)>& sampler, int level,
                                     Exponent p);

} // namespace ii
