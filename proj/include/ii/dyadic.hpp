#pragma once

#include <utility>
#include <vector>

#include "ii/config.hpp"
#include "ii/norms.hpp"
#include "ii/scalar.hpp"

namespace ii {

// Step function on [0,1] constant on each dyadic cell ((i-1)/2^n, i/2^n),
// stored as its level n and the 2^n cell values. Values are immutable after
// construction; every operation below returns a fresh value. Behaviour at the
// dyadic breakpoints themselves is never represented: cells are open
// intervals and the endpoints form a null set, so no point-evaluation API
// exists.
struct DyadicStep {
  int level = 0;
  std::vector<Scalar> coeffs;

  DyadicStep() : coeffs{Scalar(0)} {}
  DyadicStep(int lvl, std::vector<Scalar> cs);

  size_t cells() const { return coeffs.size(); }
};

// The constant function 1.
DyadicStep unit_step();
DyadicStep constant_step(const Scalar& c);
DyadicStep zero_step();

// Same function represented at level m >= f.level (each value repeated).
DyadicStep refine(const DyadicStep& f, int m);

// Minimal-level representative; idempotent.
DyadicStep canonicalize(const DyadicStep& f);

bool is_canonical(const DyadicStep& f);

// Equality of the represented functions (canonical forms compared).
bool equal(const DyadicStep& f, const DyadicStep& g);

// Places f on (0,1/2) and g on (1/2,1), compressing both domains by half.
// Result level is max(f.level, g.level) + 1 and is not canonicalized.
DyadicStep juxtapose(const DyadicStep& f, const DyadicStep& g);

// Inverse of juxtapose: halves at level max(f.level,1) - 1.
std::pair<DyadicStep, DyadicStep> split(const DyadicStep& f);

DyadicStep add(const DyadicStep& f, const DyadicStep& g);
DyadicStep sub(const DyadicStep& f, const DyadicStep& g);
DyadicStep scale(const Scalar& c, const DyadicStep& f);
DyadicStep pointwise_mul(const DyadicStep& f, const DyadicStep& g);
DyadicStep conj(const DyadicStep& f);

// Lebesgue p-norm on the probability space [0,1]:
// (sum_i |c_i|^p 2^-n)^(1/p), max_i |c_i| for p = inf.
PNormValue p_norm(const DyadicStep& f, Exponent p);

// Sum of cell values scaled by cell width; the elementary integral computed
// directly from the data, kept independent of the universal-map machinery so
// the two routes can be compared.
Scalar integrate_exact(const DyadicStep& f);

} // namespace ii
