// Test-only reference implementations, kept deliberately naive and
// independent of the library's computation paths.
#pragma once

#include "ii/dyadic.hpp"
#include "ii/instances.hpp"
#include "ii/measures.hpp"

namespace oracle {

// index arithmetic instead of repetition loops
inline ii::DyadicStep refine_naive(const ii::DyadicStep& f, int m) {
  size_t cells = size_t{1} << m;
  size_t per = size_t{1} << (m - f.level);
  std::vector<ii::Scalar> cs(cells);
  for (size_t j = 0; j < cells; ++j) cs[j] = f.coeffs[j / per];
  return ii::DyadicStep(m, std::move(cs));
}

inline ii::DyadicStep juxtapose_naive(const ii::DyadicStep& f, const ii::DyadicStep& g) {
  int lvl = (f.level > g.level ? f.level : g.level) + 1;
  size_t cells = size_t{1} << lvl;
  std::vector<ii::Scalar> cs(cells);
  for (size_t j = 0; j < cells; ++j) {
    if (j < cells / 2) {
      // cell j sits in the left half; it samples f at the doubled position
      cs[j] = refine_naive(f, lvl - 1).coeffs[j];
    } else {
      cs[j] = refine_naive(g, lvl - 1).coeffs[j - cells / 2];
    }
  }
  return ii::DyadicStep(lvl, std::move(cs));
}

// one division per cell, summed in reverse order
inline ii::Scalar integrate_naive(const ii::DyadicStep& f) {
  ii::Scalar sum;
  for (size_t i = f.coeffs.size(); i-- > 0;) sum += ii::div_pow2(f.coeffs[i], f.level);
  return sum;
}

// each node value recomputed from scratch
inline std::vector<ii::Scalar> cumulative_naive(const ii::DyadicStep& f) {
  std::vector<ii::Scalar> nodes(f.coeffs.size() + 1);
  for (size_t i = 0; i <= f.coeffs.size(); ++i) {
    ii::Scalar acc;
    for (size_t j = 0; j < i; ++j) acc += ii::div_pow2(f.coeffs[j], f.level);
    nodes[i] = acc;
  }
  return nodes;
}

// the two-piece defining formula evaluated node by node at level max+1
inline std::vector<ii::Scalar> cumulative_juxtapose_naive(const ii::PiecewiseLinear& F,
                                                          const ii::PiecewiseLinear& G) {
  int lvl = (F.level > G.level ? F.level : G.level);
  ii::PiecewiseLinear rf = ii::refine(F, lvl);
  ii::PiecewiseLinear rg = ii::refine(G, lvl);
  size_t half = size_t{1} << lvl;
  std::vector<ii::Scalar> nodes(2 * half + 1);
  for (size_t i = 0; i <= 2 * half; ++i) {
    if (i <= half)
      nodes[i] = ii::div_pow2(rf.values[i], 1);
    else
      nodes[i] = ii::div_pow2(rf.values[half] + rg.values[i - half], 1);
  }
  return nodes;
}

inline ii::Scalar expectation_naive(const ii::SimpleFn& f) {
  ii::Scalar sum;
  for (size_t i = 0; i < f.values.size(); ++i) sum += f.values[i] * ii::Scalar(f.space.weights[i]);
  return sum;
}

// set-level preimage composition
inline std::vector<std::pair<int, int>> compose_naive(const ii::PartialMap& f,
                                                      const ii::PartialMap& g) {
  std::vector<std::pair<int, int>> out;
  for (size_t a = 0; a < f.source.size(); ++a) {
    int mid = -1;
    for (size_t k = 0; k < f.domain.size(); ++k)
      if (f.domain[k] == static_cast<int>(a)) mid = f.map[k];
    if (mid < 0) continue;
    int z = -1;
    for (size_t k = 0; k < g.domain.size(); ++k)
      if (g.domain[k] == mid) z = g.map[k];
    if (z < 0) continue;
    out.emplace_back(static_cast<int>(a), z);
  }
  return out;
}

} // namespace oracle
