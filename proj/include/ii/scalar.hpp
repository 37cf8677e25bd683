#pragma once

#include <cmath>
#include <optional>
#include <string>

#include "ii/rational.hpp"

namespace ii {

// Field element: rational real part plus rational imaginary part. Real-field
// work keeps im = 0 throughout; arithmetic is generic over both cases.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(r) {}
  Scalar(long long n) : re(n) {}
  Scalar(int n) : re(n) {}
  Scalar(Rational r, Rational i) : re(r), im(i) {}
  Scalar(long long n, long long d) : re(n, d) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }

  friend Scalar operator-(const Scalar& x) { return Scalar(-x.re, -x.im); }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    return Scalar(x.re + y.re, x.im + y.im);
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    return Scalar(x.re - y.re, x.im - y.im);
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.im.is_zero() && y.im.is_zero()) return Scalar(x.re * y.re);
    return Scalar(x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re);
  }

  Scalar& operator+=(const Scalar& y) {
    re += y.re;
    im += y.im;
    return *this;
  }
  Scalar& operator-=(const Scalar& y) {
    re -= y.re;
    im -= y.im;
    return *this;
  }
  Scalar& operator*=(const Scalar& y) { return *this = *this * y; }

  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.re == y.re && x.im == y.im;
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  Scalar conj() const { return Scalar(re, -im); }

  // |x|^2, always exact
  Rational abs2() const {
    if (im.is_zero()) return re * re;
    return re * re + im * im;
  }

  // |x| as an exact rational when it is one (real or purely imaginary values)
  std::optional<Rational> abs_rational() const {
    if (im.is_zero()) return abs(re);
    if (re.is_zero()) return abs(im);
    return std::nullopt;
  }

  double abs_double() const {
    if (im.is_zero()) return std::fabs(re.to_double());
    if (re.is_zero()) return std::fabs(im.to_double());
    return std::sqrt(abs2().to_double());
  }

  double to_double() const { return re.to_double(); }
};

inline Scalar div_pow2(const Scalar& x, int k) {
  return Scalar(div_pow2(x.re, k), div_pow2(x.im, k));
}

// Total order used for grouping values into fibres; not a numeric order on C.
inline bool scalar_less(const Scalar& a, const Scalar& b) {
  if (a.re != b.re) return a.re < b.re;
  return a.im < b.im;
}

inline std::string to_string(const Scalar& x) {
  if (x.im.is_zero()) return to_string(x.re);
  return to_string(x.re) + (x.im.is_negative() ? "" : "+") + to_string(x.im) + "i";
}

} // namespace ii
