#include "efflevi/lie.hpp"

#include <algorithm>

namespace efflevi {

IntMat bracket(const IntMat& x, const IntMat& y) { return x * y - y * x; }
RatMat bracket(const RatMat& x, const RatMat& y) { return x * y - y * x; }

RatVec sl_coords(const RatMat& x) {
  require_input(x.is_square(), "sl element must be square");
  int N = x.rows;
  require_input(trace(x) == 0, "sl element must be traceless");
  RatVec c;
  c.reserve(sl_dim(N));
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) c.push_back(x(i, j));
  // Diagonal (d_1..d_N) with sum 0 expands over h_i = E_ii - E_{i+1,i+1}
  // with coefficients c_i = d_1 + ... + d_i.
  Rat acc = 0;
  for (int i = 0; i + 1 < N; ++i) {
    acc += x(i, i);
    c.push_back(acc);
  }
  return c;
}

RatMat sl_from_coords(int N, const RatVec& coords) {
  require_input(static_cast<int>(coords.size()) == sl_dim(N),
                "wrong coordinate length");
  RatMat x(N, N);
  int t = 0;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (i != j) x(i, j) = coords[t++];
  for (int i = 0; i + 1 < N; ++i) {
    x(i, i) += coords[t];
    x(i + 1, i + 1) -= coords[t];
    ++t;
  }
  return x;
}

IntVec sl_coords_int(const IntMat& x) {
  RatVec c = sl_coords(to_rat(x));
  IntVec ci;
  ensure(to_int(c, &ci), "integer matrix must have integer coordinates");
  return ci;
}

IntMat sl_from_coords_int(int N, const IntVec& coords) {
  RatMat x = sl_from_coords(N, to_rat(coords));
  IntMat xi;
  ensure(to_int(x, &xi), "integer coordinates must give an integer matrix");
  return xi;
}

CoordinateSolver::CoordinateSolver(const LieSubalgebra& g)
    : CoordinateSolver(g.coords, sl_dim(g.N)) {}

CoordinateSolver::CoordinateSolver(const std::vector<IntVec>& basis,
                                   int ambient)
    : ambient_(ambient) {
  int m = static_cast<int>(basis.size());
  for (const IntVec& v : basis) {
    ensure(static_cast<int>(v.size()) == ambient, "basis vector length");
    basis_.push_back(to_rat(v));
  }
  if (m == 0) return;
  RatMat b = to_rat_rows(basis, ambient);
  RatMat scratch = b;
  piv_ = rref_inplace(scratch);
  ensure(static_cast<int>(piv_.size()) == m, "basis must be independent");
  RatMat c(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) c(i, j) = b(i, piv_[j]);
  // coords . B = x restricted to pivot columns reads coords = x_J C^-T; store
  // the inverse transposed so a query is one multiplication.
  cinv_ = inverse(c).transpose();
}

bool CoordinateSolver::solve(const RatVec& x, RatVec* coords) const {
  ensure(static_cast<int>(x.size()) == ambient_, "query vector length");
  int m = static_cast<int>(basis_.size());
  if (m == 0) {
    if (!is_zero_vec(x)) return false;
    coords->clear();
    return true;
  }
  RatVec xj(m);
  for (int j = 0; j < m; ++j) xj[j] = x[piv_[j]];
  RatVec c = cinv_ * xj;
  // Verify on the full ambient vector; the pivot columns alone do not decide
  // membership.
  for (int j = 0; j < ambient_; ++j) {
    Rat s = 0;
    for (int i = 0; i < m; ++i) s += c[i] * basis_[i][j];
    if (s != x[j]) return false;
  }
  *coords = std::move(c);
  return true;
}

bool CoordinateSolver::solve_int(const IntVec& x, IntVec* coords) const {
  RatVec c;
  if (!solve(to_rat(x), &c)) return false;
  return to_int(c, coords);
}

bool LieSubalgebra::contains(const RatMat& x) const {
  if (dim() == 0) return x.is_zero();
  RatVec co;
  return CoordinateSolver(*this).solve(sl_coords(x), &co);
}

RatVec LieSubalgebra::coordinates(const RatMat& x) const {
  RatVec co;
  require_input(CoordinateSolver(*this).solve(sl_coords(x), &co),
                "element is outside the subalgebra");
  return co;
}

bool LieSubalgebra::same_span(const LieSubalgebra& other) const {
  if (N != other.N || dim() != other.dim()) return false;
  std::vector<IntVec> all = coords;
  all.insert(all.end(), other.coords.begin(), other.coords.end());
  return rank_of(all, sl_dim(N)) == dim();
}

namespace {

LieSubalgebra from_saturated_coords(int N, std::vector<IntVec> sat,
                                    bool require_closed) {
  LieSubalgebra g;
  g.N = N;
  g.coords = std::move(sat);
  for (const IntVec& c : g.coords) g.basis.push_back(sl_from_coords_int(N, c));
  if (require_closed)
    require_input(is_bracket_closed(g),
                  "span is not closed under the bracket");
  return g;
}

}  // namespace

LieSubalgebra lie_span(int N, const std::vector<RatMat>& gens,
                       bool require_closed) {
  require_input(N >= 1, "N must be positive");
  std::vector<IntVec> int_rows;
  for (const RatMat& m : gens) {
    require_input(m.rows == N && m.cols == N, "generator has wrong shape");
    RatVec c = sl_coords(m);
    Int d = common_denominator(c);
    IntVec iv(c.size());
    for (size_t i = 0; i < c.size(); ++i) iv[i] = num(c[i] * Rat(d));
    if (!is_zero_vec(iv)) int_rows.push_back(iv);
  }
  return from_saturated_coords(N, saturate_span(int_rows, sl_dim(N)),
                               require_closed);
}

LieSubalgebra lie_from_coord_span(int N, const std::vector<IntVec>& coord_vecs,
                                  bool require_closed) {
  std::vector<IntVec> rows;
  for (const IntVec& v : coord_vecs)
    if (!is_zero_vec(v)) rows.push_back(v);
  return from_saturated_coords(N, saturate_span(rows, sl_dim(N)),
                               require_closed);
}

bool is_bracket_closed(const LieSubalgebra& g) {
  if (g.dim() == 0) return true;
  CoordinateSolver solver(g);
  RatVec co;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      RatMat b = to_rat(bracket(g.basis[i], g.basis[j]));
      if (b.is_zero()) continue;
      if (!solver.solve(sl_coords(b), &co)) return false;
    }
  return true;
}

std::vector<std::vector<IntVec>> structure_constants(const LieSubalgebra& g) {
  int m = g.dim();
  CoordinateSolver solver(g.coords, sl_dim(g.N));
  std::vector<std::vector<IntVec>> alpha(m, std::vector<IntVec>(m));
  IntVec zero(m, Int(0));
  for (int i = 0; i < m; ++i) alpha[i].assign(m, zero);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      IntVec ci;
      // Integral because the bracket of integer matrices lies in the
      // saturated lattice g intersect sl_N(Z).
      ensure(solver.solve_int(sl_coords_int(bracket(g.basis[i], g.basis[j])),
                              &ci),
             "structure constants must be integral");
      alpha[j][i].resize(m);
      for (int k = 0; k < m; ++k) alpha[j][i][k] = -ci[k];
      alpha[i][j] = std::move(ci);
    }
  return alpha;
}

IntMat killing_form(const LieSubalgebra& g) {
  int m = g.dim();
  std::vector<std::vector<IntVec>> alpha = structure_constants(g);
  IntMat k(m, m);
  // k(i, j) = trace(ad u_i . ad u_j) = sum_{s,t} alpha(i,t)[s] alpha(j,s)[t].
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Int s = 0;
      for (int t = 0; t < m; ++t)
        for (int l = 0; l < m; ++l) s += alpha[i][t][l] * alpha[j][l][t];
      k(i, j) = s;
      k(j, i) = s;
    }
  return k;
}

LieSubalgebra derived_subalgebra(const LieSubalgebra& g) {
  std::vector<IntVec> rows;
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j)
      rows.push_back(sl_coords_int(bracket(g.basis[i], g.basis[j])));
  return lie_from_coord_span(g.N, rows, false);
}

DerivedSeries derived_series(const LieSubalgebra& g) {
  DerivedSeries s;
  LieSubalgebra cur = g;
  s.dims.push_back(cur.dim());
  while (cur.dim() > 0) {
    LieSubalgebra next = derived_subalgebra(cur);
    if (next.dim() == cur.dim()) break;
    cur = next;
    s.dims.push_back(cur.dim());
  }
  s.solvable = (cur.dim() == 0);
  s.derived_length =
      s.solvable ? static_cast<int>(s.dims.size()) - 1 : -1;
  return s;
}

std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g) {
  std::vector<LieSubalgebra> series{g};
  while (series.back().dim() > 0) {
    const LieSubalgebra& cur = series.back();
    std::vector<IntVec> rows;
    for (int i = 0; i < g.dim(); ++i)
      for (int j = 0; j < cur.dim(); ++j)
        rows.push_back(sl_coords_int(bracket(g.basis[i], cur.basis[j])));
    LieSubalgebra next = lie_from_coord_span(g.N, rows, false);
    if (next.dim() == cur.dim()) break;
    series.push_back(next);
  }
  return series;
}

namespace {

// Coordinates of x with respect to the basis of g, as a Z^dim vector.
IntVec alg_coords(const LieSubalgebra& g, const IntMat& x) {
  RatVec co = g.coordinates(to_rat(x));
  IntVec ci;
  ensure(to_int(co, &ci), "expected integral coordinates");
  return ci;
}

}  // namespace

LieSubalgebra radical(const LieSubalgebra& g) {
  int m = g.dim();
  if (m == 0) return g;
  LieSubalgebra der = derived_subalgebra(g);
  IntMat k = killing_form(g);
  // y is in the radical iff k(y, c) = 0 for every c in [g, g].
  std::vector<IntVec> rows;
  for (const IntMat& c : der.basis) {
    IntVec cc = alg_coords(g, c);
    IntVec row = k * cc;
    if (!is_zero_vec(row)) rows.push_back(row);
  }
  std::vector<IntVec> rad_coords;
  if (rows.empty()) {
    rad_coords.reserve(m);
    for (int i = 0; i < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      rad_coords.push_back(e);
    }
  } else {
    rad_coords = kernel_saturated_basis(rows_matrix(rows, m));
  }
  std::vector<IntVec> amb;
  for (const IntVec& rc : rad_coords) {
    IntVec v(sl_dim(g.N), Int(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < sl_dim(g.N); ++j) v[j] += rc[i] * g.coords[i][j];
    amb.push_back(v);
  }
  LieSubalgebra r = lie_from_coord_span(g.N, amb, true);

  // Checked postconditions: solvability, ideal property, and nondegeneracy
  // of the Killing form of g modulo r.
  ensure(derived_series(r).solvable, "radical must be solvable");
  for (const IntMat& x : g.basis)
    for (const IntMat& y : r.basis)
      ensure(r.contains(to_rat(bracket(x, y))), "radical must be an ideal");
  if (r.dim() < m) {
    // Complete r to a basis of g inside the coordinate lattice Z^m; the
    // quotient Killing form does not depend on the chosen representatives.
    std::vector<IntVec> full;
    for (const IntMat& x : r.basis) full.push_back(alg_coords(g, x));
    for (int i = 0; i < m && static_cast<int>(full.size()) < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      full.push_back(e);
      if (rank_of(full, m) != static_cast<int>(full.size())) full.pop_back();
    }
    int q = m - r.dim();
    std::vector<RatMat> qb;
    for (int t = r.dim(); t < m; ++t) {
      RatMat x(g.N, g.N);
      for (int i = 0; i < m; ++i)
        x = x + Rat(full[t][i]) * to_rat(g.basis[i]);
      qb.push_back(x);
    }
    std::vector<RatVec> full_rat;
    for (const IntVec& v : full) full_rat.push_back(to_rat(v));
    // ad on g/r: express [x, y] in the completed basis and keep the part
    // beyond r.
    auto tail_coords = [&](const RatMat& x) {
      RatVec co;
      ensure(rational_coordinates(full_rat, m, g.coordinates(x), &co),
             "coordinate solve in completed basis failed");
      RatVec t(q);
      for (int i = 0; i < q; ++i) t[i] = co[r.dim() + i];
      return t;
    };
    std::vector<RatMat> ad(q, RatMat(q, q));
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) {
        RatVec t = tail_coords(bracket(qb[a], qb[b]));
        for (int i = 0; i < q; ++i) ad[a](i, b) = t[i];
      }
    RatMat gram(q, q);
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) gram(a, b) = trace(ad[a] * ad[b]);
    ensure(det(gram) != 0,
           "Killing form of the quotient by the radical must be nondegenerate");
  }
  return r;
}

LieSubalgebra ideal_closure(const LieSubalgebra& g,
                            const std::vector<IntVec>& seeds) {
  std::vector<IntVec> span = seeds;
  LieSubalgebra cur = lie_from_coord_span(g.N, span, false);
  for (;;) {
    std::vector<IntVec> next = cur.coords;
    for (const IntMat& x : g.basis)
      for (const IntMat& y : cur.basis)
        next.push_back(sl_coords_int(bracket(x, y)));
    LieSubalgebra bigger = lie_from_coord_span(g.N, next, false);
    if (bigger.dim() == cur.dim()) break;
    cur = bigger;
  }
  return cur;
}

namespace {

void subsets_rec(int n, int k, int start, std::vector<std::vector<int>>& out,
                 std::vector<int>& scratch) {
  if (static_cast<int>(scratch.size()) == k) {
    out.push_back(scratch);
    return;
  }
  for (int i = start; i <= n - (k - static_cast<int>(scratch.size())); ++i) {
    scratch.push_back(i);
    subsets_rec(n, k, i + 1, out, scratch);
    scratch.pop_back();
  }
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> scratch;
  subsets_rec(n, k, 0, out, scratch);
  return out;
}

}  // namespace

SubspaceHeight height_subspace(const LieSubalgebra& g) {
  SubspaceHeight h;
  h.dim = g.dim();
  if (g.dim() == 0) {
    h.value = 1;
    h.wedge = {Int(1)};
    return h;
  }
  int n = sl_dim(g.N);
  int d = g.dim();
  IntMat C = rows_matrix(g.coords, n);
  std::vector<std::vector<int>> idx = subsets(n, d);
  h.wedge.reserve(idx.size());
  for (const std::vector<int>& cols : idx) {
    IntMat minor(d, d);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) minor(i, j) = C(i, cols[j]);
    h.wedge.push_back(det(minor));
  }
  Int c = content(h.wedge);
  ensure(c != 0, "wedge of independent vectors cannot vanish");
  for (Int& x : h.wedge) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  // Orientation: first nonzero Plucker coordinate positive.
  normalize_sign(h.wedge);
  h.value = sup_norm(h.wedge);
  return h;
}

LieSubalgebra normalizer_in_slN(const LieSubalgebra& W) {
  int N = W.N;
  int n = sl_dim(N);
  // Equations cutting out span(W): rows e with e . w = 0 for all w in W.
  std::vector<IntVec> ann;
  if (W.dim() > 0)
    ann = kernel_saturated_basis(rows_matrix(W.coords, n));
  if (W.dim() == 0 || ann.empty()) {
    // Normalizing 0 or all of sl_N imposes nothing.
    std::vector<IntVec> full;
    for (int i = 0; i < n; ++i) {
      IntVec e(n, Int(0));
      e[i] = 1;
      full.push_back(e);
    }
    return lie_from_coord_span(N, full, false);
  }
  std::vector<IntVec> rows;
  for (const IntMat& w : W.basis) {
    // coords([c_k, w]) for each canonical basis element c_k, as columns.
    std::vector<IntVec> cols;
    for (int kk = 0; kk < n; ++kk) {
      IntVec e(n, Int(0));
      e[kk] = 1;
      cols.push_back(sl_coords_int(bracket(sl_from_coords_int(N, e), w)));
    }
    for (const IntVec& eq : ann) {
      IntVec row(n, Int(0));
      bool nonzero = false;
      for (int kk = 0; kk < n; ++kk) {
        Int s = 0;
        for (int j = 0; j < n; ++j) s += eq[j] * cols[kk][j];
        row[kk] = s;
        if (s != 0) nonzero = true;
      }
      if (nonzero) rows.push_back(row);
    }
  }
  std::vector<IntVec> sol;
  if (rows.empty()) {
    for (int i = 0; i < n; ++i) {
      IntVec e(n, Int(0));
      e[i] = 1;
      sol.push_back(e);
    }
  } else {
    sol = kernel_saturated_basis(rows_matrix(rows, n));
  }
  return lie_from_coord_span(N, sol, true);
}

std::vector<Rat> char_poly(const RatMat& w) {
  require_input(w.is_square(), "char_poly of non-square matrix");
  int n = w.rows;
  // Faddeev-LeVerrier: exact over Q.
  std::vector<Rat> c(n + 1);
  c[n] = 1;
  RatMat M(n, n);  // starts at zero
  for (int k = 1; k <= n; ++k) {
    for (int i = 0; i < n; ++i) M(i, i) += c[n - k + 1];
    M = w * M;
    c[n - k] = -trace(M) / Rat(k);
  }
  return c;
}

Rat eigenvalue_product(const RatMat& w) {
  std::vector<Rat> c = char_poly(w);
  int n = w.rows;
  int m = 0;
  while (m < n && c[m] == 0) ++m;
  // Nilpotent iff the characteristic polynomial is t^n.
  if (m == n) return Rat(0);
  // det(tI - w) = t^m q(t) with q(0) = c[m]; the product of the nonzero
  // eigenvalues is (-1)^(n-m) c[m].
  Rat v = c[m];
  if ((n - m) % 2 == 1) v = -v;
  return v;
}

}  // namespace efflevi
