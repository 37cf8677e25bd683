#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <vector>

#include "ii/exponent.hpp"
#include "ii/scalar.hpp"

namespace ii {

// A computed p-norm. `value` is always set; `exact` holds the norm itself
// whenever it is a rational number (p in {1, inf} on rational-|.| data), and
// `exact_pow` holds value^p for finite integer p. Exact fields let isometry
// identities be checked with no tolerance at all.
struct PNormValue {
  Exponent p;
  double value = 0;
  std::optional<Rational> exact;
  std::optional<Rational> exact_pow;
};

namespace detail {

struct CompensatedSum {
  double s = 0, c = 0;
  void add(double x) {
    double y = x - c;
    double t = s + y;
    c = (t - s) - y;
    s = t;
  }
};

} // namespace detail

// xs[i] carries weight ws(i) (a non-negative rational); n entries total.
template <class GetX, class GetW>
PNormValue p_norm_impl(size_t n, GetX&& xs, GetW&& ws, Exponent p) {
  PNormValue out;
  out.p = p;
  if (p.inf) {
    bool found = false;
    Rational best2;
    size_t best_i = 0;
    for (size_t i = 0; i < n; ++i) {
      if (ws(i).is_zero()) continue;
      Rational a2 = xs(i).abs2();
      if (!found || best2 < a2) {
        found = true;
        best2 = a2;
        best_i = i;
      }
    }
    if (!found) {
      out.exact = Rational(0);
      return out;
    }
    if (auto a = xs(best_i).abs_rational()) {
      out.exact = *a;
      out.value = a->to_double();
    } else {
      out.value = std::sqrt(best2.to_double());
    }
    return out;
  }
  if (p.is_integer()) {
    long long e = p.as_integer();
    bool exact_ok = true;
    Rational sum(0);
    for (size_t i = 0; i < n && exact_ok; ++i) {
      Rational wi = ws(i);
      const Scalar si = xs(i);
      if (wi.is_zero() || si.is_zero()) continue;
      if (e % 2 == 0) {
        sum += pow_int(si.abs2(), e / 2) * wi;
      } else if (auto a = si.abs_rational()) {
        sum += pow_int(*a, e) * wi;
      } else {
        exact_ok = false;
      }
    }
    if (exact_ok) {
      out.exact_pow = sum;
      if (e == 1) {
        out.exact = sum;
        out.value = sum.to_double();
      } else {
        out.value = std::pow(sum.to_double(), 1.0 / static_cast<double>(e));
      }
      return out;
    }
  }
  double pe = p.value();
  detail::CompensatedSum cs;
  for (size_t i = 0; i < n; ++i) {
    Rational wi = ws(i);
    const Scalar si = xs(i);
    if (wi.is_zero() || si.is_zero()) continue;
    cs.add(std::pow(si.abs_double(), pe) * wi.to_double());
  }
  out.value = cs.s > 0 ? std::pow(cs.s, 1.0 / pe) : 0.0;
  return out;
}

inline PNormValue p_norm_weighted(const std::vector<Scalar>& xs, const std::vector<Rational>& ws,
                                  Exponent p) {
  return p_norm_impl(
      xs.size(), [&](size_t i) { return xs[i]; }, [&](size_t i) { return ws[i]; }, p);
}

inline PNormValue p_norm_uniform(const std::vector<Scalar>& xs, const Rational& w, Exponent p) {
  return p_norm_impl(
      xs.size(), [&](size_t i) { return xs[i]; }, [&](size_t) { return w; }, p);
}

inline PNormValue p_norm_unweighted(const std::vector<Scalar>& xs, Exponent p) {
  return p_norm_uniform(xs, Rational(1), p);
}

// Two-summand power-mean combination. Weighted form averages the p-th powers
// (the probability-space convention); unweighted just adds them. p = inf is
// max in both conventions.
inline PNormValue direct_sum_norm(const PNormValue& a, const PNormValue& b, Exponent p,
                                  bool weighted = true) {
  if (a.p != p || b.p != p) throw error("mismatched norm exponents");
  PNormValue out;
  out.p = p;
  if (p.inf) {
    if (a.exact && b.exact) {
      out.exact = max(*a.exact, *b.exact);
      out.value = out.exact->to_double();
    } else {
      out.value = a.value > b.value ? a.value : b.value;
    }
    return out;
  }
  if (a.exact_pow && b.exact_pow) {
    Rational sum = *a.exact_pow + *b.exact_pow;
    if (weighted) sum = div_pow2(sum, 1);
    out.exact_pow = sum;
    if (p.is_one()) {
      out.exact = sum;
      out.value = sum.to_double();
    } else {
      out.value = std::pow(sum.to_double(), 1.0 / p.value());
    }
    return out;
  }
  double pe = p.value();
  double sum = std::pow(a.value, pe) + std::pow(b.value, pe);
  if (weighted) sum *= 0.5;
  out.value = sum > 0 ? std::pow(sum, 1.0 / pe) : 0.0;
  return out;
}

// Pair combination of two magnitudes under the p-sum (weighted form averages
// the p-th powers; p = inf is max). Works on plain doubles so the norms being
// combined may come from different norm families.
inline double pair_power_combine(double a, double b, Exponent p, bool weighted = true) {
  if (p.inf) return a > b ? a : b;
  double pe = p.value();
  double s = std::pow(a, pe) + std::pow(b, pe);
  if (weighted) s *= 0.5;
  return s > 0 ? std::pow(s, 1.0 / pe) : 0.0;
}

inline bool close_rel(double a, double b, double rel) {
  double scale = std::fmax(std::fabs(a), std::fabs(b));
  return std::fabs(a - b) <= rel * std::fmax(scale, 1.0);
}

} // namespace ii
