#include "efflevi/siegel.hpp"

#include <algorithm>

namespace efflevi {

namespace {

bool within_entry_bound(const IntVec& v, const Int& det_bound) {
  for (const Int& x : v)
    if (x * x > det_bound) return false;
  return true;
}

}  // namespace

SiegelKernelResult siegel_kernel_basis(const IntMat& A, long node_budget) {
  int M = A.rows, N = A.cols;
  require_input(M >= 1 && N >= 1, "empty system");
  require_input(M < N, "system must have more unknowns than equations");
  require_input(rank(A) == M,
                "system has dependent rows; remove redundant equations first");

  SiegelKernelResult res;
  res.det_bound = det(A * A.transpose());
  ensure(res.det_bound > 0, "det(A A^T) must be positive at full rank");

  std::vector<IntVec> sat = kernel_saturated_basis(A);
  ensure(static_cast<int>(sat.size()) == N - M, "kernel rank mismatch");

  std::vector<RatVec> ratbasis;
  for (const IntVec& v : sat) ratbasis.push_back(to_rat(v));
  LllResult red = lll_reduce(ratbasis, Rat(1));
  std::vector<IntVec> cand;
  for (const RatVec& v : red.basis) {
    IntVec iv;
    ensure(to_int(v, &iv), "kernel vector must be integral");
    cand.push_back(iv);
  }

  bool ok = true;
  for (const IntVec& v : cand)
    if (!within_entry_bound(v, res.det_bound)) {
      ok = false;
      break;
    }
  if (ok) {
    res.basis = cand;
    return res;
  }

  // Exhaustive fallback: collect kernel vectors with every entry bounded by
  // s = floor(sqrt(det)) and pick an independent family. A spanning family
  // within the bound exists, so this cannot come up empty.
  res.enumeration_used = true;
  Int s = isqrt_floor(res.det_bound);
  int r = static_cast<int>(cand.size());
  RatMat gram(r, r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rat g = 0;
      for (int k = 0; k < N; ++k) g += Rat(cand[i][k]) * Rat(cand[j][k]);
      gram(i, j) = g;
      gram(j, i) = g;
    }
  std::vector<IntVec> found;
  Rat radius2 = Rat(N) * Rat(s) * Rat(s);
  enumerate_quadratic(
      gram, radius2,
      [&](const IntVec& co, const Rat& r2) {
        IntVec v(N, Int(0));
        for (int i = 0; i < r; ++i)
          for (int k = 0; k < N; ++k) v[k] += co[i] * cand[i][k];
        if (within_entry_bound(v, res.det_bound)) {
          normalize_sign(v);
          found.push_back(v);
        }
        return r2;
      },
      node_budget, &res.nodes);
  std::sort(found.begin(), found.end(),
            [](const IntVec& a, const IntVec& b) {
              Int sa = sup_norm(a), sb = sup_norm(b);
              if (sa != sb) return sa < sb;
              return lex_less(a, b);
            });
  found.erase(std::unique(found.begin(), found.end()), found.end());
  for (const IntVec& v : found) {
    std::vector<IntVec> trial = res.basis;
    trial.push_back(v);
    if (rank_of(trial, N) == static_cast<int>(trial.size()))
      res.basis = std::move(trial);
    if (static_cast<int>(res.basis.size()) == N - M) break;
  }
  ensure(static_cast<int>(res.basis.size()) == N - M,
         "bounded kernel enumeration found no spanning family");
  return res;
}

SiegelSolveResult siegel_inhomogeneous(const IntMat& A, const IntVec& b) {
  require_input(A.rows == static_cast<int>(b.size()),
                "right-hand side has wrong length");
  SiegelSolveResult res;
  HnfResult h = hermite_normal_form(A);
  IntVec ub = h.U * b;
  for (int i = h.rank(); i < A.rows; ++i) {
    if (ub[i] != 0) {
      res.feasible = false;
      res.certificate = h.U.row(i);
      return res;
    }
  }
  // Back-substitution over Q on the echelon rows; free variables are 0.
  RatVec x(A.cols, Rat(0));
  for (int i = h.rank() - 1; i >= 0; --i) {
    int p = h.pivot_cols[i];
    Rat s(ub[i]);
    for (int j = p + 1; j < A.cols; ++j) s -= Rat(h.H(i, j)) * x[j];
    x[p] = s / Rat(h.H(i, p));
  }
  Int d = common_denominator(x);
  res.feasible = true;
  res.d = d;
  res.y.resize(A.cols);
  for (int j = 0; j < A.cols; ++j) {
    Rat t = x[j] * Rat(d);
    ensure(den(t) == 1, "denominator clearing failed");
    res.y[j] = num(t);
  }
  res.achieved = std::max(sup_norm(res.y), abs(d));
  // Exact postcondition: A (y / d) = b.
  IntVec ay(A.rows, Int(0));
  for (int i = 0; i < A.rows; ++i)
    for (int j = 0; j < A.cols; ++j) ay[i] += A(i, j) * res.y[j];
  for (int i = 0; i < A.rows; ++i)
    ensure(ay[i] == d * b[i], "solution check failed");
  return res;
}

std::vector<IntVec> extract_small_basis(const IntegerLattice& VZ,
                                        const std::vector<IntVec>& u) {
  int k = static_cast<int>(u.size());
  require_input(k == VZ.rank(),
                "need exactly rank-many generators spanning VZ");
  // Coordinates of each u_j in the basis of VZ; column j of A.
  IntMat A(k, k);
  for (int j = 0; j < k; ++j) {
    IntVec co;
    require_input(
        integer_coordinates(VZ.basis, VZ.ambient, u[j], &co),
        "generator is not in VZ");
    for (int i = 0; i < k; ++i) A(i, j) = co[i];
  }
  require_input(rank(A) == k, "generators are dependent");

  // H = W A is upper triangular with positive diagonal dominating its column.
  // Writing (u_1..u_k) = (v_1..v_k) H defines the new basis v of VZ.
  HnfResult h = hermite_normal_form(A);
  IntMat winv = inverse_unimodular(h.U);
  std::vector<IntVec> v(k, IntVec(VZ.ambient, Int(0)));
  for (int t = 0; t < k; ++t)
    for (int i = 0; i < k; ++i) {
      if (winv(i, t) == 0) continue;
      for (int j = 0; j < VZ.ambient; ++j)
        v[t][j] += winv(i, t) * VZ.basis[i][j];
    }

  // Checked postconditions: the triangular relation, the prefix spans, and
  // the telescoping norm bound.
  for (int j = 0; j < k; ++j) {
    IntVec rec(VZ.ambient, Int(0));
    for (int t = 0; t <= j; ++t)
      for (int c = 0; c < VZ.ambient; ++c) rec[c] += h.H(t, j) * v[t][c];
    ensure(rec == u[j], "triangular reconstruction failed");
  }
  Int allowed = 0;
  for (int t = 0; t < k; ++t) {
    allowed += sup_norm(u[t]);
    ensure(sup_norm(v[t]) <= allowed, "extracted basis exceeds norm bound");
  }
  return v;
}

}  // namespace efflevi
