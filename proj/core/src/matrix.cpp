#include "efflevi/matrix.hpp"

namespace efflevi {

std::vector<int> rref_inplace(RatMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int p = -1;
    for (int i = r; i < m.rows; ++i)
      if (m(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    m.swap_rows(r, p);
    Rat inv = 1 / m(r, c);
    for (int j = c; j < m.cols; ++j) m(r, j) *= inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m(i, c) == 0) continue;
      Rat f = m(i, c);
      for (int j = c; j < m.cols; ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Rat det(const RatMat& m) {
  ensure(m.is_square(), "det of non-square matrix");
  RatMat a = m;
  int n = a.rows;
  Rat d = 1;
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Rat(0);
    if (p != c) {
      a.swap_rows(c, p);
      d = -d;
    }
    d *= a(c, c);
    Rat inv = 1 / a(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) * inv;
      for (int j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return d;
}

Int det(const IntMat& m) {
  ensure(m.is_square(), "det of non-square matrix");
  IntMat a = m;
  int n = a.rows;
  if (n == 0) return Int(1);
  Int prev = 1;
  int sign = 1;
  for (int c = 0; c < n - 1; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return Int(0);
    if (p != c) {
      a.swap_rows(c, p);
      sign = -sign;
    }
    for (int i = c + 1; i < n; ++i) {
      for (int j = c + 1; j < n; ++j) {
        Int t = a(i, j) * a(c, c) - a(i, c) * a(c, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(c, c);
  }
  return sign > 0 ? a(n - 1, n - 1) : Int(-a(n - 1, n - 1));
}

RatMat inverse(const RatMat& m) {
  require_input(m.is_square(), "inverse of non-square matrix");
  int n = m.rows;
  RatMat a = m;
  RatMat inv = RatMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int p = -1;
    for (int i = c; i < n; ++i)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    require_input(p >= 0, "matrix is singular");
    a.swap_rows(c, p);
    inv.swap_rows(c, p);
    Rat f = 1 / a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) *= f;
      inv(c, j) *= f;
    }
    for (int i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      Rat g = a(i, c);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= g * a(c, j);
        inv(i, j) -= g * inv(c, j);
      }
    }
  }
  return inv;
}

IntMat inverse_unimodular(const IntMat& m) {
  Int d = det(m);
  require_input(d == 1 || d == -1, "matrix is not unimodular");
  RatMat inv = inverse(to_rat(m));
  IntMat out;
  ensure(to_int(inv, &out), "unimodular inverse is not integral");
  return out;
}

bool solve(const RatMat& A, const RatVec& b, RatVec* x) {
  ensure(A.rows == static_cast<int>(b.size()), "shape mismatch in solve");
  RatMat aug(A.rows, A.cols + 1);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) aug(i, j) = A(i, j);
    aug(i, A.cols) = b[i];
  }
  std::vector<int> piv = rref_inplace(aug);
  if (!piv.empty() && piv.back() == A.cols) return false;
  if (x) {
    x->assign(A.cols, Rat(0));
    for (size_t r = 0; r < piv.size(); ++r) (*x)[piv[r]] = aug(static_cast<int>(r), A.cols);
  }
  return true;
}

}  // namespace efflevi
