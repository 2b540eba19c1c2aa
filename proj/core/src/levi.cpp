#include "efflevi/levi.hpp"

#include <utility>

namespace efflevi {

namespace {

LieSubalgebra subalgebra_from_saturated(int N, std::vector<IntVec> coords) {
  LieSubalgebra s;
  s.N = N;
  s.coords = std::move(coords);
  for (const IntVec& c : s.coords) s.basis.push_back(sl_from_coords_int(N, c));
  return s;
}

// Indices of a maximal independent subset of rows, scanning in order.
std::vector<int> independent_row_indices(const std::vector<IntVec>& rows,
                                         int width) {
  if (rows.empty()) return {};
  RatMat t(width, static_cast<int>(rows.size()));
  for (int j = 0; j < static_cast<int>(rows.size()); ++j)
    for (int i = 0; i < width; ++i) t(i, j) = Rat(rows[j][i]);
  return rref_inplace(t);
}

// Radical with a small basis: independent rows of the Killing system feed the
// bounded kernel lemma, then the extraction lemma turns the small kernel
// vectors into a basis of the saturated kernel lattice.
LieSubalgebra small_radical(const LieSubalgebra& g, long node_budget) {
  int m = g.dim();
  if (m == 0) return g;
  LieSubalgebra der = derived_subalgebra(g);
  IntMat k = killing_form(g);
  CoordinateSolver solver(g.coords, sl_dim(g.N));
  std::vector<IntVec> rows;
  for (const IntMat& c : der.basis) {
    IntVec cc;
    ensure(solver.solve_int(sl_coords_int(c), &cc),
           "derived algebra must sit inside g");
    IntVec row = k * cc;
    if (!is_zero_vec(row)) rows.push_back(row);
  }
  std::vector<int> sel = independent_row_indices(rows, m);

  std::vector<IntVec> rad_coords;  // coordinates in the basis of g
  if (sel.empty()) {
    for (int i = 0; i < m; ++i) {
      IntVec e(m, Int(0));
      e[i] = 1;
      rad_coords.push_back(e);
    }
  } else if (static_cast<int>(sel.size()) < m) {
    std::vector<IntVec> selected;
    for (int i : sel) selected.push_back(rows[i]);
    IntMat A = rows_matrix(selected, m);
    SiegelKernelResult skr = siegel_kernel_basis(A, node_budget);
    std::vector<IntVec> sat = kernel_saturated_basis(A);
    rad_coords =
        extract_small_basis(IntegerLattice(m, sat), skr.basis);
  }

  std::vector<IntVec> amb;
  for (const IntVec& rc : rad_coords) {
    IntVec v(sl_dim(g.N), Int(0));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < sl_dim(g.N); ++j) v[j] += rc[i] * g.coords[i][j];
    amb.push_back(v);
  }
  LieSubalgebra r = subalgebra_from_saturated(g.N, std::move(amb));
  ensure(is_bracket_closed(r), "radical must be a subalgebra");
  ensure(r.same_span(radical(g)), "radical cross-check failed");
  return r;
}

struct LeviCtx {
  const LieSubalgebra* keep = nullptr;
  long node_budget = kDefaultNodeBudget;
  int depth = 0;
  std::vector<Int> achieved;
};

LieSubalgebra levi_recurse(const LieSubalgebra& g,
                           const LieSubalgebra* expected_rad, LeviCtx& ctx,
                           LieSubalgebra* rad_out) {
  int n = sl_dim(g.N);
  LieSubalgebra r = small_radical(g, ctx.node_budget);
  if (expected_rad)
    ensure(r.same_span(*expected_rad),
           "radical of the splitting kernel must be the derived radical");
  if (rad_out) *rad_out = r;
  if (r.dim() == 0) return g;

  int M = g.dim();
  int m = r.dim();
  LieSubalgebra der_r = derived_subalgebra(r);
  int mp = der_r.dim();
  int q = m - mp;

  // Adapted generating family in g-coordinates: brackets spanning [r, r],
  // completion to r, the subalgebra to keep, completion to g.
  CoordinateSolver gsolver(g.coords, n);
  std::vector<IntVec> fam;
  auto try_add = [&](const IntVec& gc, int target_rank) {
    if (static_cast<int>(fam.size()) >= target_rank) return false;
    fam.push_back(gc);
    if (rank_of(fam, M) < static_cast<int>(fam.size())) {
      fam.pop_back();
      return false;
    }
    return true;
  };
  auto g_coords_of = [&](const IntMat& x) {
    IntVec gc;
    ensure(gsolver.solve_int(sl_coords_int(x), &gc),
           "vector must lie in the lattice of g");
    return gc;
  };
  for (int i = 0; i < m && static_cast<int>(fam.size()) < mp; ++i)
    for (int j = i + 1; j < m && static_cast<int>(fam.size()) < mp; ++j) {
      IntMat b = bracket(r.basis[i], r.basis[j]);
      if (b.is_zero()) continue;
      try_add(g_coords_of(b), mp);
    }
  ensure(static_cast<int>(fam.size()) == mp,
         "brackets must span the derived radical");
  for (int i = 0; i < m && static_cast<int>(fam.size()) < m; ++i)
    try_add(g_coords_of(r.basis[i]), m);
  ensure(static_cast<int>(fam.size()) == m, "radical completion failed");
  if (ctx.keep) {
    for (const IntMat& w : ctx.keep->basis) {
      size_t before = fam.size();
      try_add(g_coords_of(w), M);
      require_input(fam.size() == before + 1,
                    "subalgebra to preserve meets the radical");
    }
  }
  for (int i = 0; i < M && static_cast<int>(fam.size()) < M; ++i) {
    IntVec e(M, Int(0));
    e[i] = 1;
    try_add(e, M);
  }
  ensure(static_cast<int>(fam.size()) == M, "adapted family must span g");

  std::vector<IntVec> std_basis;
  for (int i = 0; i < M; ++i) {
    IntVec e(M, Int(0));
    e[i] = 1;
    std_basis.push_back(e);
  }
  std::vector<IntVec> adapted =
      extract_small_basis(IntegerLattice(M, std_basis), fam);

  std::vector<IntVec> adapted_amb;
  for (const IntVec& a : adapted) {
    IntVec v(n, Int(0));
    for (int i = 0; i < M; ++i)
      for (int j = 0; j < n; ++j) v[j] += a[i] * g.coords[i][j];
    adapted_amb.push_back(v);
  }
  LieSubalgebra gad = subalgebra_from_saturated(g.N, adapted_amb);
  std::vector<std::vector<IntVec>> alpha = structure_constants(gad);

  // Action of each basis vector on r/[r, r] through the classes of
  // u_{mp+1}..u_m.
  std::vector<IntMat> act(M, IntMat(q, q));
  for (int i = 0; i < M; ++i)
    for (int t = 0; t < q; ++t) {
      const IntVec& co = alpha[i][mp + t];
      for (int k = m; k < M; ++k)
        ensure(co[k] == 0, "bracket with the radical must stay inside it");
      for (int s = 0; s < q; ++s) act[i](s, t) = co[mp + s];
    }

  // Linear system for the splitting map f : g -> r/[r, r], unknowns F(s, k)
  // with f(u_k) = sum_s F(s, k) d_s, flattened as s * M + k.
  int n_unk = q * M;
  std::vector<IntVec> sys_rows;
  std::vector<Int> sys_rhs;
  auto add_row = [&](IntVec row, Int rhs) {
    sys_rows.push_back(std::move(row));
    sys_rhs.push_back(std::move(rhs));
  };
  // f restricted to r is the canonical projection.
  for (int i = 0; i < m; ++i)
    for (int s = 0; s < q; ++s) {
      IntVec row(n_unk, Int(0));
      row[s * M + i] = 1;
      add_row(std::move(row), Int(i >= mp && s == i - mp ? 1 : 0));
    }
  // f vanishes on the subalgebra to keep.
  if (ctx.keep) {
    CoordinateSolver asolver(adapted, M);
    for (const IntMat& w : ctx.keep->basis) {
      IntVec a;
      ensure(asolver.solve_int(g_coords_of(w), &a),
             "kept subalgebra must have integer adapted coordinates");
      for (int s = 0; s < q; ++s) {
        IntVec row(n_unk, Int(0));
        for (int k = 0; k < M; ++k) row[s * M + k] = a[k];
        add_row(std::move(row), Int(0));
      }
    }
  }
  // Cocycle condition f([u_i, u_j]) = u_i f(u_j) - u_j f(u_i).
  for (int i = 0; i < M; ++i)
    for (int j = i + 1; j < M; ++j)
      for (int s = 0; s < q; ++s) {
        IntVec row(n_unk, Int(0));
        for (int k = 0; k < M; ++k) row[s * M + k] += alpha[i][j][k];
        for (int t = 0; t < q; ++t) {
          row[t * M + j] -= act[i](s, t);
          row[t * M + i] += act[j](s, t);
        }
        if (!is_zero_vec(row)) add_row(std::move(row), Int(0));
      }

  // Keep one row per independent augmented row; the kept rows span all of
  // them, so the solution sets agree exactly.
  std::vector<IntVec> aug;
  aug.reserve(sys_rows.size());
  for (size_t i = 0; i < sys_rows.size(); ++i) {
    IntVec a = sys_rows[i];
    a.push_back(sys_rhs[i]);
    aug.push_back(std::move(a));
  }
  std::vector<int> sel = independent_row_indices(aug, n_unk + 1);
  std::vector<IntVec> srows;
  IntVec srhs;
  for (int i : sel) {
    srows.push_back(sys_rows[i]);
    srhs.push_back(sys_rhs[i]);
  }
  SiegelSolveResult sol =
      siegel_inhomogeneous(rows_matrix(srows, n_unk), srhs);
  ensure(sol.feasible, "splitting system must be solvable");
  ctx.depth += 1;
  ctx.achieved.push_back(sol.achieved);

  // F' = d f is integral with full row rank; its kernel is ker f.
  IntMat fp(q, M);
  for (int s = 0; s < q; ++s)
    for (int k = 0; k < M; ++k) fp(s, k) = sol.y[s * M + k];

  LieSubalgebra ker;
  if (q == M) {
    ker = subalgebra_from_saturated(g.N, {});
  } else {
    SiegelKernelResult skr = siegel_kernel_basis(fp, ctx.node_budget);
    std::vector<IntVec> sat = kernel_saturated_basis(fp);
    std::vector<IntVec> kc =
        extract_small_basis(IntegerLattice(M, sat), skr.basis);
    std::vector<IntVec> amb;
    for (const IntVec& v : kc) {
      IntVec w(n, Int(0));
      for (int i = 0; i < M; ++i)
        for (int j = 0; j < n; ++j) w[j] += v[i] * gad.coords[i][j];
      amb.push_back(w);
    }
    ker = subalgebra_from_saturated(g.N, std::move(amb));
    ensure(is_bracket_closed(ker),
           "kernel of the splitting map must be a subalgebra");
  }
  return levi_recurse(ker, &der_r, ctx, nullptr);
}

}  // namespace

LeviResult effective_levi(const LieSubalgebra& g, const LieSubalgebra* keep,
                          long node_budget) {
  require_input(g.N >= 1, "ambient rank must be positive");
  require_input(is_bracket_closed(g), "input span is not a subalgebra");
  if (keep) {
    require_input(keep->N == g.N, "kept subalgebra has mismatched rank");
    require_input(is_bracket_closed(*keep),
                  "kept subalgebra is not closed under the bracket");
    for (const IntMat& b : keep->basis)
      require_input(g.contains(to_rat(b)),
                    "kept subalgebra is not inside the input");
    require_input(det(killing_form(*keep)) != 0,
                  "kept subalgebra must have nondegenerate Killing form");
  }
  LeviCtx ctx;
  ctx.keep = keep;
  ctx.node_budget = node_budget;
  LeviResult out;
  out.h = levi_recurse(g, nullptr, ctx, &out.r);
  out.depth = ctx.depth;
  out.solve_achieved = std::move(ctx.achieved);
  out.ht_g = height_subspace(g).value;
  out.ht_h = height_subspace(out.h).value;
  out.ht_r = height_subspace(out.r).value;
  ensure(levi_valid(g, out.h, keep), "constructed Levi factor is invalid");
  return out;
}

bool levi_valid(const LieSubalgebra& g, const LieSubalgebra& h,
                const LieSubalgebra* keep) {
  if (h.N != g.N) return false;
  for (const IntMat& b : h.basis)
    if (!g.contains(to_rat(b))) return false;
  if (!is_bracket_closed(h)) return false;
  if (det(killing_form(h)) == 0) return false;
  LieSubalgebra r = radical(g);
  if (h.dim() + r.dim() != g.dim()) return false;
  std::vector<IntVec> all = h.coords;
  all.insert(all.end(), r.coords.begin(), r.coords.end());
  if (rank_of(all, sl_dim(g.N)) != h.dim() + r.dim()) return false;
  if (keep)
    for (const IntMat& b : keep->basis)
      if (!h.contains(to_rat(b))) return false;
  return true;
}

FlagStandardization standardize_radical(const LieSubalgebra& h,
                                        const LieSubalgebra& r) {
  require_input(h.N == r.N, "mismatched ambient rank");
  int N = h.N;

  // Chain V_{k+1} = r . V_k of saturated lattices; strict decrease is
  // exactly nilpotence of the action.
  std::vector<std::vector<IntVec>> levels;
  std::vector<IntVec> cur;
  for (int i = 0; i < N; ++i) {
    IntVec e(N, Int(0));
    e[i] = 1;
    cur.push_back(e);
  }
  levels.push_back(cur);
  while (!cur.empty()) {
    std::vector<IntVec> imgs;
    for (const IntMat& x : r.basis)
      for (const IntVec& v : cur) {
        IntVec w = x * v;
        if (!is_zero_vec(w)) imgs.push_back(std::move(w));
      }
    std::vector<IntVec> next = saturate_span(imgs, N);
    require_input(next.size() < cur.size(),
                  "radical does not act nilpotently");
    cur = std::move(next);
    levels.push_back(cur);
  }
  int c = static_cast<int>(levels.size()) - 1;

  // Per level, the tail of the adapted basis completes the deeper lattice.
  std::vector<std::vector<IntVec>> comp(c);
  for (int l = 0; l < c; ++l) {
    const std::vector<IntVec>& big = levels[l];
    const std::vector<IntVec>& small = levels[l + 1];
    std::vector<IntVec> fam = small;
    for (const IntVec& v : big) {
      if (fam.size() == big.size()) break;
      fam.push_back(v);
      if (rank_of(fam, N) < static_cast<int>(fam.size())) fam.pop_back();
    }
    ensure(fam.size() == big.size(), "completion inside the chain failed");
    std::vector<IntVec> adapted =
        extract_small_basis(IntegerLattice(N, big), fam);
    comp[l].assign(adapted.begin() + small.size(), adapted.end());
  }

  FlagStandardization out;
  for (int l = 1; l < c; ++l)
    out.flag_dims.push_back(static_cast<int>(levels[l].size()));
  IntMat dinv(N, N);
  int col = 0;
  for (int l = c - 1; l >= 0; --l) {
    out.block_sizes.push_back(static_cast<int>(comp[l].size()));
    for (const IntVec& v : comp[l]) {
      for (int i = 0; i < N; ++i) dinv(i, col) = v[i];
      ++col;
    }
  }
  ensure(col == N, "flag complements must fill the space");
  Int dd = det(dinv);
  ensure(dd == 1 || dd == -1, "flag basis must be unimodular");
  if (dd == -1)
    for (int i = 0; i < N; ++i) dinv(i, N - 1) = -dinv(i, N - 1);
  out.delta_inv = dinv;
  out.delta = inverse_unimodular(dinv);
  out.delta_size = std::max(sup_norm(out.delta), sup_norm(out.delta_inv));

  // Exact verification of the block shapes after conjugation.
  std::vector<int> block_of(N);
  {
    int b = 0, used = 0;
    for (int i = 0; i < N; ++i) {
      if (i - used == out.block_sizes[b]) {
        used += out.block_sizes[b];
        ++b;
      }
      block_of[i] = b;
    }
  }
  for (const IntMat& x : r.basis) {
    IntMat y = out.delta * x * out.delta_inv;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (y(i, j) != 0)
          ensure(block_of[i] < block_of[j],
                 "conjugated radical must be strictly block upper");
  }
  for (const IntMat& x : h.basis) {
    IntMat y = out.delta * x * out.delta_inv;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (y(i, j) != 0)
          ensure(block_of[i] <= block_of[j],
                 "conjugated Levi factor must be block upper");
  }
  return out;
}

}  // namespace efflevi
