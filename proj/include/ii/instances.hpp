#pragma once

#include "ii/dyadic.hpp"
#include "ii/matrix.hpp"
#include "ii/universal.hpp"

namespace ii {

// Continuous piecewise-linear function F on [0,1] with F(0) = 0, stored as
// its values at the 2^n + 1 dyadic nodes of level n. Linear interpolation
// attains extrema at nodes, so the sup norm reads off the node data.
struct PiecewiseLinear {
  int level = 0;
  std::vector<Scalar> values;  // size 2^n + 1, values[0] = 0

  PiecewiseLinear();
  PiecewiseLinear(int lvl, std::vector<Scalar> vals);

  size_t nodes() const { return values.size(); }
};

PiecewiseLinear zero_pl();
// F(x) = x at the given level
PiecewiseLinear identity_pl(int lvl = 0);

// Same function at a finer node grid (new nodes by midpoint interpolation).
PiecewiseLinear refine(const PiecewiseLinear& F, int m);

bool equal(const PiecewiseLinear& F, const PiecewiseLinear& G);

PNormValue sup_norm(const PiecewiseLinear& F);

PiecewiseLinear add(const PiecewiseLinear& F, const PiecewiseLinear& G);
PiecewiseLinear scale(const Scalar& c, const PiecewiseLinear& F);

// The cumulative-side juxtaposition: left half is F compressed and halved,
// right half continues from F(1) with G compressed and halved. Fixes the
// identity function and contracts sup norms against the averaged pair norm.
PiecewiseLinear juxtapose(const PiecewiseLinear& F, const PiecewiseLinear& G);

// Integral of f over [0,1], derived through the universal morphism into the
// scalar mean target (the table is compiled once per level and cached).
Scalar integrate(const DyadicStep& f);

// x -> integral of f over [0,x]: exact cumulative sums at the dyadic nodes.
PiecewiseLinear indefinite_integral(const DyadicStep& f);

// Slopes of F cell by cell; inverse of indefinite_integral.
DyadicStep derivative(const PiecewiseLinear& F);

struct InclusionCert {
  DyadicStep f;
  PNormValue norm_r;  // finer exponent
  PNormValue norm_p;  // coarser exponent
  bool certified = false;  // norm_p <= norm_r held
};

// Identity on representatives, witnessing that the coarser norm never
// exceeds the finer one. Requires 1 <= p <= r < inf.
InclusionCert inclusion(const DyadicStep& f, Exponent r, Exponent p);

// integral of f*g for exactly conjugate exponents p, q > 1.
Scalar pairing(const DyadicStep& f, const DyadicStep& g, Exponent p, Exponent q);

// Conjugation of the block direct sum of two level-n operators by the
// juxtaposition isomorphism: a level-(n+1) operator.
Mat juxtapose_hom(const Mat& phi1, const Mat& phi2);

// Largest sampled ratio |Av|_out / |v|_in over random coefficient vectors,
// seeded; `extra` vectors are forced into the sample set.
double sampled_operator_norm(const Mat& m, Exponent in_p, int in_level, Exponent out_p,
                             int out_level, int samples, uint64_t seed,
                             const std::vector<Vec>& extra = {});

// Function on Cantor space depending on the first `level` bits; coefficient
// i is the value on the cylinder whose leading bits spell i (most significant
// bit first). Carries the sup norm.
struct CylinderFunction {
  DyadicStep step;

  CylinderFunction() = default;
  explicit CylinderFunction(DyadicStep s) : step(std::move(s)) {}
};

PNormValue sup_norm(const CylinderFunction& f);

// Precompose with the projection that zeroes all bits from position n on:
// each block of 2^(level-n) coefficients becomes its first entry.
CylinderFunction cantor_project(const CylinderFunction& f, int n);

// Transport along the binary-expansion section of the Cantor surjection;
// at cylinder resolution the coefficient data is unchanged.
DyadicStep cantor_to_interval(const CylinderFunction& f);

CylinderFunction interval_to_cantor(const DyadicStep& f);

// Shipped targets.
AlgebraTarget mean_target(Exponent p);                 // scalar field, arithmetic mean
AlgebraTarget first_block_target();                    // scalar field, left projection (sup world)
AlgebraTarget convex_scalar_target(Rational a);        // scalar field, a*x + (1-a)*y (sup world)
AlgebraTarget pair_mean_target();                      // two copies of the mean, sup norm
AlgebraTarget cumulative_target(int lvl);              // node-value space with the cumulative juxtaposition
AlgebraTarget level_truncation_target(int lvl, Exponent p);  // the step space itself, averaged down

// The node values of the universal image of f in the cumulative target;
// agrees with indefinite_integral at every dyadic node.
Vec indefinite_via_universal(const MorphismTable& cumulative_table, const DyadicStep& f);

} // namespace ii
