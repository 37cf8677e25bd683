#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "ii/scalar.hpp"

namespace ii {

using Vec = std::vector<Scalar>;

inline Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw error("vector size mismatch");
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline Vec operator*(const Scalar& c, const Vec& a) {
  Vec r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = c * a[i];
  return r;
}

inline bool vec_is_zero(const Vec& a) {
  for (const auto& x : a)
    if (!x.is_zero()) return false;
  return true;
}

inline Vec concat(const Vec& a, const Vec& b) {
  Vec r;
  r.reserve(a.size() + b.size());
  r.insert(r.end(), a.begin(), a.end());
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Dense row-major matrix of exact scalars. Zero-dimensional shapes are legal;
// they show up as maps out of the space of functions on an empty point set.
struct Mat {
  size_t rows = 0, cols = 0;
  std::vector<Scalar> a;

  Mat() = default;
  Mat(size_t r, size_t c) : rows(r), cols(c), a(r * c) {}
  Mat(std::initializer_list<std::initializer_list<Scalar>> init) {
    rows = init.size();
    cols = rows ? init.begin()->size() : 0;
    a.reserve(rows * cols);
    for (const auto& row : init) {
      if (row.size() != cols) throw error("ragged matrix literal");
      a.insert(a.end(), row.begin(), row.end());
    }
  }

  Scalar& at(size_t i, size_t j) { return a[i * cols + j]; }
  const Scalar& at(size_t i, size_t j) const { return a[i * cols + j]; }

  static Mat identity(size_t n) {
    Mat m(n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
  }

  static Mat zero(size_t r, size_t c) { return Mat(r, c); }

  friend bool operator==(const Mat& x, const Mat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend bool operator!=(const Mat& x, const Mat& y) { return !(x == y); }
};

inline Vec mul(const Mat& m, const Vec& v) {
  if (m.cols != v.size()) throw error("matrix-vector shape mismatch");
  Vec r(m.rows);
  for (size_t i = 0; i < m.rows; ++i) {
    Scalar acc;
    const Scalar* row = m.a.data() + i * m.cols;
    for (size_t j = 0; j < m.cols; ++j) {
      if (row[j].is_zero() || v[j].is_zero()) continue;
      acc += row[j] * v[j];
    }
    r[i] = acc;
  }
  return r;
}

inline Mat mul(const Mat& x, const Mat& y) {
  if (x.cols != y.rows) throw error("matrix-matrix shape mismatch");
  Mat r(x.rows, y.cols);
  for (size_t i = 0; i < x.rows; ++i) {
    for (size_t k = 0; k < x.cols; ++k) {
      const Scalar& xik = x.at(i, k);
      if (xik.is_zero()) continue;
      const Scalar* yrow = y.a.data() + k * y.cols;
      Scalar* rrow = r.a.data() + i * y.cols;
      for (size_t j = 0; j < y.cols; ++j) {
        if (yrow[j].is_zero()) continue;
        rrow[j] += xik * yrow[j];
      }
    }
  }
  return r;
}

inline Mat add(const Mat& x, const Mat& y) {
  if (x.rows != y.rows || x.cols != y.cols) throw error("matrix shape mismatch");
  Mat r(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline Mat transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j);
  return r;
}

inline Mat conj_transpose(const Mat& x) {
  Mat r(x.cols, x.rows);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r.at(j, i) = x.at(i, j).conj();
  return r;
}

// [x 0; 0 y]
inline Mat block_diag(const Mat& x, const Mat& y) {
  Mat r(x.rows + y.rows, x.cols + y.cols);
  for (size_t i = 0; i < x.rows; ++i)
    for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
  for (size_t i = 0; i < y.rows; ++i)
    for (size_t j = 0; j < y.cols; ++j) r.at(x.rows + i, x.cols + j) = y.at(i, j);
  return r;
}

// [x | y]
inline Mat hcat(const Mat& x, const Mat& y) {
  if (x.rows != y.rows) throw error("matrix shape mismatch");
  Mat r(x.rows, x.cols + y.cols);
  for (size_t i = 0; i < x.rows; ++i) {
    for (size_t j = 0; j < x.cols; ++j) r.at(i, j) = x.at(i, j);
    for (size_t j = 0; j < y.cols; ++j) r.at(i, x.cols + j) = y.at(i, j);
  }
  return r;
}

} // namespace ii
