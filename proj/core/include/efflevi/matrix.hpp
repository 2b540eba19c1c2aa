#pragma once

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "efflevi/rational.hpp"

namespace efflevi {

// Dense row-major matrix over an exact scalar type (Int or Rat).
template <class T>
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Mat(std::initializer_list<std::initializer_list<T>> init) {
    rows = static_cast<int>(init.size());
    cols = rows ? static_cast<int>(init.begin()->size()) : 0;
    a.reserve(static_cast<size_t>(rows) * cols);
    for (const auto& row : init) {
      ensure(static_cast<int>(row.size()) == cols, "ragged initializer");
      for (const auto& x : row) a.push_back(x);
    }
  }

  T& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const T& operator()(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }

  Mat transpose() const {
    Mat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const T& x : a)
      if (x != 0) return false;
    return true;
  }

  bool is_square() const { return rows == cols; }

  std::vector<T> row(int i) const {
    std::vector<T> r(cols);
    for (int j = 0; j < cols; ++j) r[j] = (*this)(i, j);
    return r;
  }

  std::vector<T> col(int j) const {
    std::vector<T> c(rows);
    for (int i = 0; i < rows; ++i) c[i] = (*this)(i, j);
    return c;
  }

  void swap_rows(int i, int k) {
    if (i == k) return;
    for (int j = 0; j < cols; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }

  void swap_cols(int j, int l) {
    if (j == l) return;
    for (int i = 0; i < rows; ++i) std::swap((*this)(i, j), (*this)(i, l));
  }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> operator+(const Mat<T>& x, const Mat<T>& y) {
  ensure(x.rows == y.rows && x.cols == y.cols, "shape mismatch in +");
  Mat<T> z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x, const Mat<T>& y) {
  ensure(x.rows == y.rows && x.cols == y.cols, "shape mismatch in -");
  Mat<T> z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
  return z;
}

template <class T>
Mat<T> operator-(const Mat<T>& x) {
  Mat<T> z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = -x.a[i];
  return z;
}

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  ensure(x.cols == y.rows, "shape mismatch in *");
  Mat<T> z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const T& xik = x(i, k);
      if (xik == 0) continue;
      for (int j = 0; j < y.cols; ++j) z(i, j) += xik * y(k, j);
    }
  return z;
}

template <class T>
Mat<T> operator*(const T& s, const Mat<T>& x) {
  Mat<T> z(x.rows, x.cols);
  for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = s * x.a[i];
  return z;
}

template <class T>
std::vector<T> operator*(const Mat<T>& x, const std::vector<T>& v) {
  ensure(x.cols == static_cast<int>(v.size()), "shape mismatch in mat*vec");
  std::vector<T> r(x.rows);
  for (int i = 0; i < x.rows; ++i) {
    T s = 0;
    for (int j = 0; j < x.cols; ++j) s += x(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

template <class T>
T trace(const Mat<T>& x) {
  ensure(x.is_square(), "trace of non-square matrix");
  T s = 0;
  for (int i = 0; i < x.rows; ++i) s += x(i, i);
  return s;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) r.a[i] = Rat(m.a[i]);
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

// True and fills out if every entry is integral.
inline bool to_int(const RatMat& m, IntMat* out) {
  IntMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) {
    if (den(m.a[i]) != 1) return false;
    r.a[i] = num(m.a[i]);
  }
  if (out) *out = std::move(r);
  return true;
}

inline bool to_int(const RatVec& v, IntVec* out) {
  IntVec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    if (den(v[i]) != 1) return false;
    r[i] = num(v[i]);
  }
  if (out) *out = std::move(r);
  return true;
}

// Least common denominator of all entries.
inline Int common_denominator(const RatMat& m) {
  Int d = 1;
  for (const Rat& x : m.a) d = lcm(d, den(x));
  return d;
}

inline Int common_denominator(const RatVec& v) {
  Int d = 1;
  for (const Rat& x : v) d = lcm(d, den(x));
  return d;
}

template <class T>
T sup_norm(const std::vector<T>& v) {
  T m = 0;
  for (const T& x : v) m = std::max<T>(m, abs(x));
  return m;
}

template <class T>
T sup_norm(const Mat<T>& x) {
  return sup_norm(x.a);
}

template <class T>
bool is_zero_vec(const std::vector<T>& v) {
  for (const T& x : v)
    if (x != 0) return false;
  return true;
}

// Reduced row echelon form. Returns pivot column indices.
std::vector<int> rref_inplace(RatMat& m);

inline int rank(const RatMat& m) {
  RatMat c = m;
  return static_cast<int>(rref_inplace(c).size());
}

inline int rank(const IntMat& m) { return rank(to_rat(m)); }

// Determinant by exact rational elimination.
Rat det(const RatMat& m);

// Determinant by Bareiss fraction-free elimination.
Int det(const IntMat& m);

// Inverse; throws invalid_input if singular.
RatMat inverse(const RatMat& m);

// Inverse of a unimodular integer matrix; throws invalid_input if det != +-1.
IntMat inverse_unimodular(const IntMat& m);

// Solves A x = b; returns false if inconsistent. Free variables are set to 0.
bool solve(const RatMat& A, const RatVec& b, RatVec* x);

// Stacks vectors as the rows of a matrix.
template <class T>
Mat<T> rows_matrix(const std::vector<std::vector<T>>& rows, int cols) {
  Mat<T> m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    ensure(static_cast<int>(rows[i].size()) == cols, "ragged rows_matrix");
    for (int j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

inline RatMat to_rat_rows(const std::vector<IntVec>& vecs, int dim) {
  RatMat m(static_cast<int>(vecs.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Rat(vecs[i][j]);
  return m;
}

inline RatMat to_rat_rows(const std::vector<RatVec>& vecs, int dim) {
  RatMat m(static_cast<int>(vecs.size()), dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = vecs[i][j];
  return m;
}

// Rank of a list of vectors inside an ambient space of dimension dim.
template <class V>
int rank_of(const std::vector<V>& vecs, int dim) {
  if (vecs.empty()) return 0;
  return rank(to_rat_rows(vecs, dim));
}

}  // namespace efflevi
