#pragma once

#include <cstdint>
#include <string>

#include "ii/error.hpp"

namespace ii {

using int128 = __int128;
using uint128 = unsigned __int128;

namespace detail {

inline uint128 uabs(int128 v) {
  return v < 0 ? -static_cast<uint128>(v) : static_cast<uint128>(v);
}

inline uint128 gcd_u128(uint128 a, uint128 b) {
  while (b != 0) {
    uint128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline int128 checked_add(int128 a, int128 b) {
  int128 r;
  if (__builtin_add_overflow(a, b, &r)) throw error("exact arithmetic overflow");
  return r;
}

inline int128 checked_sub(int128 a, int128 b) {
  int128 r;
  if (__builtin_sub_overflow(a, b, &r)) throw error("exact arithmetic overflow");
  return r;
}

inline int128 checked_mul(int128 a, int128 b) {
  int128 r;
  if (__builtin_mul_overflow(a, b, &r)) throw error("exact arithmetic overflow");
  return r;
}

inline double u128_to_double(uint128 u) {
  return static_cast<double>(static_cast<uint64_t>(u >> 64)) * 18446744073709551616.0 +
         static_cast<double>(static_cast<uint64_t>(u));
}

inline double i128_to_double(int128 v) {
  double d = u128_to_double(uabs(v));
  return v < 0 ? -d : d;
}

} // namespace detail

// Exact rational with 128-bit components. Always normalized: den > 0,
// gcd(|num|, den) = 1. Overflow throws instead of wrapping.
struct Rational {
  int128 num = 0;
  int128 den = 1;

  Rational() = default;
  Rational(long long n) : num(n), den(1) {}
  Rational(int n) : num(n), den(1) {}
  Rational(long long n, long long d) { *this = make(n, d); }

  static Rational make(int128 n, int128 d) {
    if (d == 0) throw error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    if (n == 0) return Rational();
    uint128 g = detail::gcd_u128(detail::uabs(n), static_cast<uint128>(d));
    Rational r;
    r.num = n / static_cast<int128>(g);
    r.den = d / static_cast<int128>(g);
    return r;
  }

  bool is_zero() const { return num == 0; }
  bool is_integer() const { return den == 1; }
  bool is_negative() const { return num < 0; }

  friend Rational operator-(const Rational& x) {
    Rational r;
    r.num = -x.num;
    r.den = x.den;
    return r;
  }

  friend Rational operator+(const Rational& x, const Rational& y) {
    if (x.num == 0) return y;
    if (y.num == 0) return x;
    if (x.den == y.den) {
      return make(detail::checked_add(x.num, y.num), x.den);
    }
    uint128 g = detail::gcd_u128(static_cast<uint128>(x.den), static_cast<uint128>(y.den));
    int128 xd = x.den / static_cast<int128>(g);
    int128 yd = y.den / static_cast<int128>(g);
    int128 n = detail::checked_add(detail::checked_mul(x.num, yd), detail::checked_mul(y.num, xd));
    int128 d = detail::checked_mul(x.den, yd);
    return make(n, d);
  }

  friend Rational operator-(const Rational& x, const Rational& y) { return x + (-y); }

  friend Rational operator*(const Rational& x, const Rational& y) {
    if (x.num == 0 || y.num == 0) return Rational();
    uint128 g1 = detail::gcd_u128(detail::uabs(x.num), static_cast<uint128>(y.den));
    uint128 g2 = detail::gcd_u128(detail::uabs(y.num), static_cast<uint128>(x.den));
    int128 n = detail::checked_mul(x.num / static_cast<int128>(g1), y.num / static_cast<int128>(g2));
    int128 d = detail::checked_mul(x.den / static_cast<int128>(g2), y.den / static_cast<int128>(g1));
    Rational r;
    r.num = n;
    r.den = d;
    return r;
  }

  friend Rational operator/(const Rational& x, const Rational& y) {
    if (y.num == 0) throw error("rational division by zero");
    Rational inv;
    inv.num = y.num < 0 ? -y.den : y.den;
    inv.den = y.num < 0 ? -y.num : y.num;
    return x * inv;
  }

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.num == y.num && x.den == y.den;
  }
  friend bool operator!=(const Rational& x, const Rational& y) { return !(x == y); }

  friend bool operator<(const Rational& x, const Rational& y) {
    return detail::checked_mul(x.num, y.den) < detail::checked_mul(y.num, x.den);
  }
  friend bool operator>(const Rational& x, const Rational& y) { return y < x; }
  friend bool operator<=(const Rational& x, const Rational& y) { return !(y < x); }
  friend bool operator>=(const Rational& x, const Rational& y) { return !(x < y); }

  double to_double() const {
    return detail::i128_to_double(num) / detail::u128_to_double(static_cast<uint128>(den));
  }
};

inline Rational abs(const Rational& x) {
  Rational r;
  r.num = x.num < 0 ? -x.num : x.num;
  r.den = x.den;
  return r;
}

inline Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }
inline Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }

inline Rational pow_int(Rational x, long long e) {
  if (e < 0) {
    x = Rational(1) / x;
    e = -e;
  }
  Rational r(1);
  while (e > 0) {
    if (e & 1) r *= x;
    e >>= 1;
    if (e) x *= x;
  }
  return r;
}

// x / 2^k, exact
inline Rational div_pow2(const Rational& x, int k) {
  if (k == 0 || x.num == 0) return x;
  int128 n = x.num;
  int128 d = x.den;
  while (k > 0 && (n & 1) == 0) {
    n >>= 1;
    --k;
  }
  while (k-- > 0) d = detail::checked_mul(d, 2);
  Rational r;
  r.num = n;
  r.den = d;
  return r;
}

inline std::string to_string(int128 v) {
  if (v == 0) return "0";
  bool neg = v < 0;
  uint128 u = detail::uabs(v);
  char buf[48];
  int i = 48;
  while (u > 0) {
    buf[--i] = static_cast<char>('0' + static_cast<int>(u % 10));
    u /= 10;
  }
  std::string s(buf + i, 48 - i);
  return neg ? "-" + s : s;
}

inline std::string to_string(const Rational& x) {
  if (x.den == 1) return to_string(x.num);
  return to_string(x.num) + "/" + to_string(x.den);
}

// Accepts "n" or "n/d", optional leading minus on either part.
inline Rational parse_rational(const std::string& s) {
  auto parse_int = [](const std::string& t) -> int128 {
    if (t.empty()) throw error("empty integer in rational literal");
    size_t i = 0;
    bool neg = false;
    if (t[0] == '-' || t[0] == '+') {
      neg = t[0] == '-';
      i = 1;
    }
    if (i == t.size()) throw error("malformed integer in rational literal");
    int128 v = 0;
    for (; i < t.size(); ++i) {
      if (t[i] < '0' || t[i] > '9') throw error("malformed rational literal: " + t);
      v = detail::checked_mul(v, 10);
      v = detail::checked_add(v, t[i] - '0');
    }
    return neg ? -v : v;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    Rational r;
    r.num = parse_int(s);
    return r;
  }
  return Rational::make(parse_int(s.substr(0, slash)), parse_int(s.substr(slash + 1)));
}

} // namespace ii
