#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "ii/batch.hpp"
#include "ii/matrix.hpp"
#include "ii/norms.hpp"
#include "ii/random.hpp"

namespace ii {

// Finite weighted point space: the measure of a subset is the sum of its
// point weights, every subset is measurable, and a point of weight zero is a
// null set.
struct FiniteMeasureSpace {
  std::vector<std::string> points;
  std::vector<Rational> weights;

  FiniteMeasureSpace() = default;
  FiniteMeasureSpace(std::vector<std::string> pts, std::vector<Rational> ws);

  size_t size() const { return points.size(); }
  Rational total() const;
  int index_of(const std::string& name) const;  // -1 when absent
  std::string key() const;                      // canonical serialization

  friend bool operator==(const FiniteMeasureSpace&, const FiniteMeasureSpace&) = default;
};

FiniteMeasureSpace sub_space(const FiniteMeasureSpace& X, const std::vector<int>& indices);

// Injection preserving weights point by point; `image[k]` is the index in
// `into` of the k-th point of `from`.
struct Embedding {
  FiniteMeasureSpace from, into;
  std::vector<int> image;
};

Embedding embedding_of_subset(const FiniteMeasureSpace& X, const std::vector<int>& indices);
Embedding identity_embedding(const FiniteMeasureSpace& X);
Embedding compose(const Embedding& inner, const Embedding& outer);  // outer o inner

// Total measure-preserving map: to[x] indexes the target point, and each
// target point's weight equals the sum of its preimage weights.
struct PresMap {
  FiniteMeasureSpace from, to_space;
  std::vector<int> to;
};

PresMap make_pres_map(FiniteMeasureSpace from, FiniteMeasureSpace to_space, std::vector<int> to);

// Measure-preserving partial map (A, s): a subset A of the source with a
// measure-preserving map on it. `domain` holds sorted source indices, `map`
// the parallel target indices.
struct PartialMap {
  FiniteMeasureSpace source, target;
  std::vector<int> domain;
  std::vector<int> map;
};

// Checked constructor (validates the measure-preserving equation).
PartialMap make_partial(FiniteMeasureSpace source, FiniteMeasureSpace target,
                        std::vector<int> domain, std::vector<int> map);
// Unchecked, for negative tests.
PartialMap make_partial_unchecked(FiniteMeasureSpace source, FiniteMeasureSpace target,
                                  std::vector<int> domain, std::vector<int> map);

PartialMap identity_partial(const FiniteMeasureSpace& X);
// An embedding i : Y -> X enters the partial-map category reversed, as
// (iY, i^-1) : X -> Y.
PartialMap as_partial(const Embedding& e);
PartialMap as_partial(const PresMap& s);

// (A,s) then (B,t): domain is the s-preimage of B, map the composite.
PartialMap compose_partial(const PartialMap& f, const PartialMap& g);

bool partial_maps_equal(const PartialMap& f, const PartialMap& g);

// True iff the map is injective on its domain with weights matching point by
// point (the reversed form of an embedding).
bool is_embedding(const PartialMap& f);

// Function on the points of a finite measure space.
struct SimpleFn {
  FiniteMeasureSpace space;
  Vec values;

  SimpleFn() = default;
  SimpleFn(FiniteMeasureSpace sp, Vec vals);
};

SimpleFn unit_fn(const FiniteMeasureSpace& X);
SimpleFn indicator_fn(const FiniteMeasureSpace& X, const std::vector<int>& indices);

// Almost-everywhere equality: agreement off weight-zero points.
bool ae_equal(const SimpleFn& f, const SimpleFn& g);

SimpleFn add(const SimpleFn& f, const SimpleFn& g);
SimpleFn scale(const Scalar& c, const SimpleFn& f);

// g on the target pulled back along (A,s): value g(s(x)) on A, zero off A.
SimpleFn pullback(const PartialMap& f, const SimpleFn& g);

// (sum_x |f(x)|^p w(x))^(1/p); for p = inf the max over positive-weight points.
PNormValue p_norm(const SimpleFn& f, Exponent p);

// integral = sum of values times weights, exact.
Scalar integrate(const SimpleFn& f);

// Finitely supported signed (or complex) measure: one atom mass per point.
struct SignedMeasure {
  FiniteMeasureSpace space;
  Vec mass;
};

// total-variation norm: sum of absolute atom masses
PNormValue tv_norm(const SignedMeasure& nu);

// f d(mu): atom mass f(x) w(x) at each point.
SignedMeasure density_measure(const SimpleFn& f);

// sum f(x) conj(g(x)) w(x), exact.
Scalar inner_product(const SimpleFn& f, const SimpleFn& g);

// A normed-space-valued functor on finite measure spaces together with one
// distinguished element per space, presented extensionally: carriers and
// actions are produced on demand for the spaces a run touches.
struct FunctorTarget {
  virtual ~FunctorTarget() = default;
  virtual std::string name() const = 0;
  virtual Exponent p() const = 0;
  virtual bool has_pres_action() const = 0;
  virtual bool is_hilbert() const { return false; }

  virtual size_t dim(const FiniteMeasureSpace& X) const = 0;
  virtual Vec unit_element(const FiniteMeasureSpace& X) const = 0;
  virtual Mat act_embed(const Embedding& e) const = 0;
  virtual Mat act_pres(const PresMap& s) const = 0;
  virtual PNormValue norm(const FiniteMeasureSpace& X, const Vec& v) const = 0;
  virtual Scalar inner(const FiniteMeasureSpace& X, const Vec& a, const Vec& b) const;
  // zero test in the carrier (quotient-aware for a.e.-style carriers)
  virtual bool is_zero_elem(const FiniteMeasureSpace& X, const Vec& v) const;

  bool equal_elem(const FiniteMeasureSpace& X, const Vec& a, const Vec& b) const;

  // the distinguished element of a subset, pushed into the ambient space
  Vec unit_of_subset(const FiniteMeasureSpace& X, const std::vector<int>& indices) const;
};

using FunctorTargetPtr = std::shared_ptr<FunctorTarget>;

FunctorTargetPtr field_total_target();               // scalar field with total measures
FunctorTargetPtr simple_lp_target(Exponent p);       // simple functions with the p-norm
FunctorTargetPtr measures_target();                  // signed measures with total variation
FunctorTargetPtr hilbert_twist_target(uint64_t seed);  // unitarily twisted square-integrable world
// negative controls
FunctorTargetPtr scaled_unit_target(Rational c, Exponent p);  // distinguished element too large
FunctorTargetPtr nonadditive_unit_target();                   // distinguished element not additive

// The canonical natural map out of simple functions determined by the
// distinguished elements: f with fibres f^-1(c) maps to the sum of
// c * (unit of the fibre pushed into X).
Vec universal_map(const FunctorTarget& t, const SimpleFn& f);

struct AxiomOptions {
  bool parallel = true;
  bool check_attainment = false;  // demand equality where the reference carrier attains it
  size_t max_kept_failures = 5;
  double tol = 1e-9;
};

struct AxiomReport {
  size_t trials = 0;
  size_t checks = 0;
  size_t failure_count = 0;
  std::vector<Failure> findings;
  bool passed() const { return failure_count == 0; }
};

// Randomized verification over generated spaces, complementary embedding
// pairs and quotient maps: additivity of the distinguished elements and
// their invariance under measure-preserving maps are exact checks, the norm
// bounds carry the stated tolerance, and orthogonality (Hilbert mode) is
// exact. Failures come back shrunk.
AxiomReport verify_axioms(const FunctorTarget& t, int trials, uint64_t seed,
                          const AxiomOptions& opt = {});

// Pullback-extension square for a quotient map and a target subset: extending
// after restricting equals restricting after extending, as matrices, exactly.
bool check_beck_chevalley(const FunctorTarget& t, const PresMap& s, const std::vector<int>& B);

// unit of a disjoint union of subsets = sum of the subsets' units, exactly;
// the empty family checks the zero element.
bool check_additivity(const FunctorTarget& t, const FiniteMeasureSpace& X,
                      const std::vector<std::vector<int>>& parts);

// A user-supplied natural family, given per space as a matrix from function
// values to target coordinates.
using NaturalFamily = std::function<Mat(const FiniteMeasureSpace&)>;

// Desk-scale uniqueness: a family sending the unit function to the
// distinguished element agrees with universal_map on every simple function
// over the supplied spaces.
bool agrees_with_universal_map(const FunctorTarget& t, const NaturalFamily& family,
                               const std::vector<FiniteMeasureSpace>& spaces);

// Generators (sizes 0-8, denominators <= 16, weight-zero points included).
FiniteMeasureSpace random_space(Rng& rng, int max_points = 8);
std::vector<int> random_subset(Rng& rng, size_t n);
std::pair<std::vector<int>, std::vector<int>> random_partition(Rng& rng, size_t n);
PresMap random_quotient(Rng& rng, const FiniteMeasureSpace& X);
SimpleFn random_simple_fn(Rng& rng, const FiniteMeasureSpace& X, int max_num = 8, int max_den = 8);

} // namespace ii
