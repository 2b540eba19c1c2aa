#include "efflevi/hnf.hpp"

namespace efflevi {

namespace {

void add_row_multiple(IntMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int j = 0; j < m.cols; ++j) m(dst, j) -= q * m(src, j);
}

void negate_row(IntMat& m, int i) {
  for (int j = 0; j < m.cols; ++j) m(i, j) = -m(i, j);
}

}  // namespace

HnfResult hermite_normal_form(const IntMat& A) {
  HnfResult res;
  res.H = A;
  res.U = IntMat::identity(A.rows);
  IntMat& H = res.H;
  IntMat& U = res.U;
  int r = 0;
  for (int c = 0; c < A.cols && r < A.rows; ++c) {
    // Euclidean elimination below the pivot row: repeatedly reduce by the
    // entry of smallest absolute value until one nonzero entry remains.
    while (true) {
      int best = -1;
      for (int i = r; i < H.rows; ++i) {
        if (H(i, c) == 0) continue;
        if (best < 0 || abs(H(i, c)) < abs(H(best, c))) best = i;
      }
      if (best < 0) break;
      H.swap_rows(r, best);
      U.swap_rows(r, best);
      bool done = true;
      for (int i = r + 1; i < H.rows; ++i) {
        if (H(i, c) == 0) continue;
        Int q = floor_div(H(i, c), H(r, c));
        add_row_multiple(H, i, r, q);
        add_row_multiple(U, i, r, q);
        if (H(i, c) != 0) done = false;
      }
      if (done) break;
    }
    if (r < H.rows && H(r, c) != 0) {
      if (H(r, c) < 0) {
        negate_row(H, r);
        negate_row(U, r);
      }
      for (int i = 0; i < r; ++i) {
        Int q = floor_div(H(i, c), H(r, c));
        add_row_multiple(H, i, r, q);
        add_row_multiple(U, i, r, q);
      }
      res.pivot_cols.push_back(c);
      ++r;
    }
  }
  return res;
}

std::vector<Int> SnfResult::divisors() const {
  std::vector<Int> d;
  int n = std::min(D.rows, D.cols);
  for (int i = 0; i < n; ++i) {
    if (D(i, i) == 0) break;
    d.push_back(D(i, i));
  }
  return d;
}

namespace {

void add_col_multiple(IntMat& m, int dst, int src, const Int& q) {
  if (q == 0) return;
  for (int i = 0; i < m.rows; ++i) m(i, dst) -= q * m(i, src);
}

void negate_col(IntMat& m, int j) {
  for (int i = 0; i < m.rows; ++i) m(i, j) = -m(i, j);
}

}  // namespace

SnfResult smith_normal_form(const IntMat& A) {
  SnfResult res;
  res.D = A;
  res.U = IntMat::identity(A.rows);
  res.V = IntMat::identity(A.cols);
  IntMat& D = res.D;
  IntMat& U = res.U;
  IntMat& V = res.V;
  int n = std::min(D.rows, D.cols);
  for (int t = 0; t < n; ++t) {
    // Move a nonzero entry of minimal absolute value to (t, t), then clear
    // its row and column; repeat until both are clear.
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < D.rows; ++i)
        for (int j = t; j < D.cols; ++j) {
          if (D(i, j) == 0) continue;
          if (bi < 0 || abs(D(i, j)) < abs(D(bi, bj))) {
            bi = i;
            bj = j;
          }
        }
      if (bi < 0) {
        bi = bj = t;  // remaining block is zero
        break;
      }
      D.swap_rows(t, bi);
      U.swap_rows(t, bi);
      D.swap_cols(t, bj);
      V.swap_cols(t, bj);
      bool clean = true;
      for (int i = t + 1; i < D.rows; ++i) {
        if (D(i, t) == 0) continue;
        Int q = floor_div(D(i, t), D(t, t));
        add_row_multiple(D, i, t, q);
        add_row_multiple(U, i, t, q);
        if (D(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < D.cols; ++j) {
        if (D(t, j) == 0) continue;
        Int q = floor_div(D(t, j), D(t, t));
        add_col_multiple(D, j, t, q);
        add_col_multiple(V, j, t, q);
        if (D(t, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (D(t, t) == 0) break;
  }
  // Enforce the divisibility chain d_t | d_{t+1}.
  for (int t = 0; t + 1 < n; ++t) {
    if (D(t, t) == 0) break;
    for (int s = t + 1; s < n; ++s) {
      if (D(s, s) == 0) continue;
      if (D(s, s) % D(t, t) == 0) continue;
      // Fold d_s into position t: add column s to column t, then redo the
      // pivot elimination, which replaces d_t by gcd and d_s by lcm.
      add_col_multiple(D, t, s, Int(-1));
      add_col_multiple(V, t, s, Int(-1));
      while (true) {
        if (D(s, t) != 0) {
          if (abs(D(s, t)) < abs(D(t, t)) || D(t, t) == 0) {
            D.swap_rows(t, s);
            U.swap_rows(t, s);
          }
          Int q = floor_div(D(s, t), D(t, t));
          add_row_multiple(D, s, t, q);
          add_row_multiple(U, s, t, q);
          if (D(s, t) != 0) continue;
        }
        if (D(t, s) != 0) {
          Int q = floor_div(D(t, s), D(t, t));
          add_col_multiple(D, s, t, q);
          add_col_multiple(V, s, t, q);
          if (D(t, s) != 0) {
            if (abs(D(t, s)) < abs(D(t, t))) {
              D.swap_cols(t, s);
              V.swap_cols(t, s);
            }
            continue;
          }
        }
        break;
      }
    }
  }
  for (int t = 0; t < n; ++t) {
    if (D(t, t) < 0) {
      negate_col(D, t);
      negate_col(V, t);
    }
  }
  return res;
}

std::vector<IntVec> kernel_saturated_basis(const IntMat& A) {
  // H = U * A^T; rows of U whose image row is zero form a saturated basis of
  // ker(A): they extend to a basis of Z^N, and any kernel vector's
  // coordinates on the non-kernel rows vanish because their images are
  // independent.
  HnfResult h = hermite_normal_form(A.transpose());
  std::vector<IntVec> basis;
  for (int i = h.rank(); i < h.U.rows; ++i) basis.push_back(h.U.row(i));
  return basis;
}

std::vector<IntVec> saturate_span(const std::vector<IntVec>& rows,
                                  int ambient) {
  if (rows.empty()) return {};
  IntMat R = rows_matrix(rows, ambient);
  std::vector<IntVec> ann = kernel_saturated_basis(R);
  if (ann.empty()) {
    std::vector<IntVec> full;
    for (int i = 0; i < ambient; ++i) {
      IntVec e(ambient, Int(0));
      e[i] = 1;
      full.push_back(e);
    }
    ensure(rank_of(rows, ambient) == ambient, "saturation rank mismatch");
    return full;
  }
  std::vector<IntVec> sat = kernel_saturated_basis(rows_matrix(ann, ambient));
  ensure(static_cast<int>(sat.size()) == rank_of(rows, ambient),
         "saturation rank mismatch");
  return sat;
}

bool is_saturated(const std::vector<IntVec>& basis, int ambient) {
  if (basis.empty()) return true;
  SnfResult s = smith_normal_form(rows_matrix(basis, ambient));
  std::vector<Int> d = s.divisors();
  if (static_cast<int>(d.size()) != static_cast<int>(basis.size()))
    return false;  // dependent vectors
  for (const Int& x : d)
    if (x != 1) return false;
  return true;
}

bool integer_coordinates(const std::vector<IntVec>& basis, int ambient,
                         const IntVec& v, IntVec* coords) {
  RatMat A = to_rat_rows(basis, ambient).transpose();
  RatVec x;
  if (!solve(A, to_rat(v), &x)) return false;
  IntVec xi;
  if (!to_int(x, &xi)) return false;
  if (coords) *coords = std::move(xi);
  return true;
}

bool rational_coordinates(const std::vector<RatVec>& basis, int ambient,
                          const RatVec& v, RatVec* coords) {
  RatMat A = to_rat_rows(basis, ambient).transpose();
  return solve(A, v, coords);
}

}  // namespace efflevi
