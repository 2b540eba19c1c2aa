#include "efflevi/unipotent.hpp"

#include "efflevi/lattice.hpp"
#include "efflevi/siegel.hpp"

namespace efflevi {

namespace {

bool nilpotent_matrix(const RatMat& x) {
  if (!x.is_square()) return false;
  RatMat pw = x;
  for (int k = 1; k < x.rows; ++k) pw = pw * x;
  return pw.is_zero();
}

Int factorial(int n) {
  Int f(1);
  for (int k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace

NilpotentAlgebra nilpotent_algebra(const LieSubalgebra& r) {
  for (const IntMat& u : r.basis)
    require_input(nilpotent_matrix(to_rat(u)),
                  "basis matrix is not nilpotent");
  std::vector<LieSubalgebra> series = lower_central_series(r);
  require_input(series.back().dim() == 0, "algebra is not nilpotent");

  NilpotentAlgebra out;
  out.underlying = r;
  out.nilpotency_class = static_cast<int>(series.size()) - 1;

  // Every element is now a nilpotent matrix: the generalized weights of a
  // nilpotent linear algebra vanish on matrix-nilpotent elements and are
  // determined by their values on a basis. Spot-check through the trace
  // dichotomy anyway.
  for (const IntMat& u : r.basis)
    ensure(eigenvalue_product(to_rat(u)) == 0,
           "basis element must have zero eigenvalue product");
  for (int pass = 0; pass < 2; ++pass) {
    RatMat combo(r.N, r.N);
    for (int i = 0; i < r.dim(); ++i) {
      Rat c = pass == 0 ? Rat(i + 1) : Rat(1, i + 2);
      combo = combo + c * to_rat(r.basis[i]);
    }
    if (r.dim() > 0)
      ensure(eigenvalue_product(combo) == 0,
             "combination must have zero eigenvalue product");
  }

  if (r.dim() == 0) return out;

  int amb = sl_dim(r.N);
  std::vector<IntVec> deep_first;
  for (int j = static_cast<int>(series.size()) - 1; j >= 0; --j) {
    for (const IntVec& v : series[j].coords) {
      deep_first.push_back(v);
      if (rank_of(deep_first, amb) < static_cast<int>(deep_first.size()))
        deep_first.pop_back();
    }
  }
  ensure(static_cast<int>(deep_first.size()) == r.dim(),
         "series must span the algebra");
  std::vector<IntVec> small =
      extract_small_basis(IntegerLattice(amb, r.coords), deep_first);

  for (int i = static_cast<int>(small.size()) - 1; i >= 0; --i) {
    out.malcev.push_back(small[i]);
    int deep_idx = i;
    int lay = 1;
    for (size_t j = 1; j < series.size(); ++j)
      if (deep_idx < series[j].dim()) lay = static_cast<int>(j) + 1;
    out.layer.push_back(lay);
  }
  for (size_t i = 1; i < out.layer.size(); ++i)
    ensure(out.layer[i - 1] <= out.layer[i],
           "layers must be nondecreasing from the top");
  return out;
}

RatMat exp_nilpotent(const RatMat& x) {
  require_input(x.is_square() && x.rows >= 1, "matrix must be square");
  int N = x.rows;
  RatMat acc(N, N);
  RatMat pw = RatMat::identity(N);
  Int fact(1);
  for (int k = 0; k < N; ++k) {
    if (k > 0) fact *= k;
    acc = acc + Rat(Int(1), fact) * pw;
    pw = pw * x;
  }
  require_input(pw.is_zero(), "matrix is not nilpotent");
  return acc;
}

RatMat log_unipotent(const RatMat& u) {
  require_input(u.is_square() && u.rows >= 1, "matrix must be square");
  int N = u.rows;
  RatMat n = u - RatMat::identity(N);
  RatMat acc(N, N);
  RatMat pw = n;
  for (int k = 1; k < N; ++k) {
    Rat c(Int(k % 2 == 1 ? 1 : -1), Int(k));
    acc = acc + c * pw;
    pw = pw * n;
  }
  require_input(pw.is_zero(), "matrix is not unipotent");
  return acc;
}

UnipotentReduction unipotent_reduce(const RatMat& h,
                                    const NilpotentAlgebra& r) {
  int N = r.underlying.N;
  require_input(h.is_square() && h.rows == N,
                "element size must match the algebra");
  RatMat x = log_unipotent(h);

  UnipotentReduction out;
  out.gamma = IntMat::identity(N);
  out.reduced = h;
  if (r.underlying.dim() == 0) {
    require_input(x.is_zero(), "logarithm lies outside the algebra");
    out.achieved = sup_norm(out.reduced);
    return out;
  }

  CoordinateSolver solver(r.malcev, sl_dim(N));
  RatVec alpha;
  require_input(solver.solve(sl_coords(x), &alpha),
                "logarithm lies outside the algebra");

  Int nfact = factorial(N);
  int m = static_cast<int>(r.malcev.size());
  for (int i = 0; i < m; ++i) {
    x = log_unipotent(out.reduced);
    ensure(solver.solve(sl_coords(x), &alpha),
           "reduction must stay inside the algebra");
    Int k = round_half_down_remainder(alpha[i] / nfact);
    if (k == 0) continue;
    IntMat w = sl_from_coords_int(N, r.malcev[i]);
    RatMat step = exp_nilpotent(Rat(-k * nfact) * to_rat(w));
    IntMat gstep;
    ensure(to_int(step, &gstep), "lattice step must be integral");
    out.gamma = out.gamma * gstep;
    out.reduced = out.reduced * step;
  }

  x = log_unipotent(out.reduced);
  ensure(solver.solve(sl_coords(x), &alpha),
         "reduction must stay inside the algebra");
  for (const Rat& a : alpha) {
    Rat twice = a * 2;
    ensure(-nfact <= twice && twice < nfact,
           "coordinates must land in the reduction interval");
  }
  ensure(det(out.gamma) == 1, "reduction matrix must be unimodular");
  ensure(h * to_rat(out.gamma) == out.reduced,
         "reduced element must factor through gamma");
  out.coords = alpha;
  out.achieved = sup_norm(out.reduced);
  return out;
}

}  // namespace efflevi
