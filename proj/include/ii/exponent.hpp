#pragma once

#include <string>

#include "ii/rational.hpp"

namespace ii {

// Norm exponent p in [1, inf]; rational values are kept exact so conjugacy
// (1/p + 1/q = 1) can be decided without floats.
struct Exponent {
  bool inf = false;
  Rational q = Rational(1);

  static Exponent infinity() {
    Exponent e;
    e.inf = true;
    return e;
  }

  static Exponent of(Rational v) {
    if (v < Rational(1)) throw error("not a norm exponent");
    Exponent e;
    e.q = v;
    return e;
  }

  static Exponent of(long long n, long long d = 1) { return of(Rational(n, d)); }

  bool is_one() const { return !inf && q == Rational(1); }
  bool is_integer() const { return !inf && q.is_integer(); }
  long long as_integer() const { return static_cast<long long>(q.num); }

  double value() const { return inf ? HUGE_VAL : q.to_double(); }

  Exponent conjugate() const {
    if (inf) return of(Rational(1));
    if (is_one()) return infinity();
    // q/(q-1)
    return of(q / (q - Rational(1)));
  }

  friend bool operator==(const Exponent& a, const Exponent& b) {
    if (a.inf != b.inf) return false;
    return a.inf || a.q == b.q;
  }
  friend bool operator!=(const Exponent& a, const Exponent& b) { return !(a == b); }

  // order on [1, inf]
  friend bool operator<(const Exponent& a, const Exponent& b) {
    if (a.inf) return false;
    if (b.inf) return true;
    return a.q < b.q;
  }
  friend bool operator<=(const Exponent& a, const Exponent& b) { return a == b || a < b; }
};

inline bool conjugate_pair(const Exponent& p, const Exponent& q) {
  if (p.inf) return q.is_one();
  if (q.inf) return p.is_one();
  return Rational(1) / p.q + Rational(1) / q.q == Rational(1);
}

inline std::string to_string(const Exponent& p) {
  return p.inf ? "inf" : to_string(p.q);
}

inline Exponent parse_exponent(const std::string& s) {
  if (s == "inf" || s == "Inf" || s == "INF" || s == "oo") return Exponent::infinity();
  return Exponent::of(parse_rational(s));
}

} // namespace ii
