#include "efflevi/lattice.hpp"

#include <algorithm>

namespace efflevi {

IntegerLattice::IntegerLattice(int amb, std::vector<IntVec> b)
    : ambient(amb), basis(std::move(b)) {
  for (const IntVec& v : basis)
    require_input(static_cast<int>(v.size()) == ambient,
                  "lattice vector has wrong dimension");
  require_input(rank_of(basis, ambient) == static_cast<int>(basis.size()),
                "lattice basis is dependent");
}

GramProfile gram_profile(const std::vector<RatVec>& basis) {
  int n = static_cast<int>(basis.size());
  ensure(n > 0, "gram_profile of empty basis");
  size_t dim = basis[0].size();
  std::vector<RatVec> star(basis);
  GramProfile p;
  p.b2.assign(n, Rat(0));
  p.mu = RatMat(n, n);
  for (int i = 0; i < n; ++i) p.mu(i, i) = 1;
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      Rat dot = 0;
      for (size_t k = 0; k < dim; ++k) dot += basis[j][k] * star[i][k];
      ensure(p.b2[i] != 0, "gram_profile of dependent basis");
      Rat mu = dot / p.b2[i];
      p.mu(i, j) = mu;
      for (size_t k = 0; k < dim; ++k) star[j][k] -= mu * star[i][k];
    }
    Rat n2 = 0;
    for (size_t k = 0; k < dim; ++k) n2 += star[j][k] * star[j][k];
    ensure(n2 != 0, "gram_profile of dependent basis");
    p.b2[j] = n2;
  }
  return p;
}

namespace {

// Gram-Schmidt data for the working basis; recomputed after swaps. Exact and
// cheap at the dimensions this library targets.
struct GsData {
  RatVec b2;
  RatMat mu;
};

GsData gs_of(const std::vector<RatVec>& basis) {
  GramProfile p = gram_profile(basis);
  return {p.b2, p.mu};
}

}  // namespace

LllResult lll_reduce(const std::vector<RatVec>& basis, const Rat& delta) {
  require_input(delta > Rat(1, 4) && delta <= 1, "delta must be in (1/4, 1]");
  int n = static_cast<int>(basis.size());
  LllResult res;
  res.basis = basis;
  res.U = IntMat::identity(n);
  if (n <= 1) return res;
  size_t dim = basis[0].size();
  for (const RatVec& v : basis)
    require_input(v.size() == dim, "ragged lattice basis");
  require_input(rank_of(basis, static_cast<int>(dim)) == n,
                "lll_reduce requires an independent basis");

  GsData gs = gs_of(res.basis);
  auto size_reduce = [&](int j, int i) {
    // Make |mu(i, j)| <= 1/2 by subtracting an integer multiple of basis[i].
    Int r = round_half_down_remainder(gs.mu(i, j));
    if (r == 0) return;
    Rat rr(r);
    for (size_t k = 0; k < dim; ++k) res.basis[j][k] -= rr * res.basis[i][k];
    for (int k = 0; k < n; ++k) res.U(k, j) -= r * res.U(k, i);
    for (int k = 0; k < i; ++k) gs.mu(k, j) -= rr * gs.mu(k, i);
    gs.mu(i, j) -= rr;
  };

  int k = 1;
  while (k < n) {
    for (int i = k - 1; i >= 0; --i) size_reduce(k, i);
    Rat lhs = gs.b2[k];
    Rat rhs = (delta - gs.mu(k - 1, k) * gs.mu(k - 1, k)) * gs.b2[k - 1];
    if (lhs >= rhs) {
      ++k;
    } else {
      std::swap(res.basis[k - 1], res.basis[k]);
      res.U.swap_cols(k - 1, k);
      gs = gs_of(res.basis);
      k = std::max(k - 1, 1);
    }
  }
  return res;
}

void enumerate_quadratic(const RatMat& gram, const Rat& radius2,
                         const std::function<Rat(const IntVec&, const Rat&)>& cb,
                         long node_budget, long* nodes_used) {
  int n = gram.rows;
  ensure(gram.cols == n, "gram matrix must be square");
  // Exact Cholesky-style decomposition: Q(x) = sum_i d[i] (x_i + sum_{j>i}
  // c(i,j) x_j)^2 with d[i] > 0.
  RatMat c = gram;
  RatVec d(n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < i; ++k) {
      Rat f = d[k] * c(k, i);
      for (int j = i; j < n; ++j) c(i, j) -= f * c(k, j);
    }
    d[i] = c(i, i);
    require_input(d[i] > 0, "quadratic form is not positive definite");
    for (int j = i + 1; j < n; ++j) c(i, j) /= d[i];
  }

  long nodes = 0;
  Rat r2 = radius2;
  IntVec x(n, Int(0));
  // center[i] = sum_{j>i} c(i,j) x_j, maintained along the descent.
  RatVec partial(n + 1, Rat(0));  // accumulated form value below level i

  // Iterative depth-first search from level n-1 down to 0.
  struct Frame {
    Int cur;
    Int hi;
    Rat center;
  };
  std::vector<Frame> st(n);
  int lvl = n - 1;
  bool descend = true;
  while (lvl < n) {
    if (descend) {
      Rat center = 0;
      for (int j = lvl + 1; j < n; ++j) center += c(lvl, j) * Rat(x[j]);
      Rat room = r2 - partial[lvl + 1];
      if (room < 0) {
        descend = false;
        ++lvl;
        continue;
      }
      // Integer range for x with d[lvl] * (x + center)^2 <= room:
      // |x + center| <= sqrt(room / d[lvl]).
      Rat rad2 = room / d[lvl];
      Int w = isqrt_floor_rat(rad2) + 2;
      Int lo = floor_rat(-center) - w;
      Int hi = floor_rat(-center) + w + 1;
      // Tighten exactly at both ends.
      while (lo <= hi) {
        Rat t = Rat(lo) + center;
        if (t * t * d[lvl] <= room) break;
        ++lo;
      }
      while (hi >= lo) {
        Rat t = Rat(hi) + center;
        if (t * t * d[lvl] <= room) break;
        --hi;
      }
      if (lo > hi) {
        descend = false;
        ++lvl;
        continue;
      }
      st[lvl] = {lo, hi, center};
      x[lvl] = lo;
    } else {
      ++x[lvl];
      if (x[lvl] > st[lvl].hi) {
        ++lvl;
        continue;
      }
    }
    if (++nodes > node_budget)
      throw resource_limit("enumeration exceeded node budget");
    Rat t = Rat(x[lvl]) + st[lvl].center;
    Rat val = partial[lvl + 1] + d[lvl] * t * t;
    if (val > r2) {
      // Values are unimodal in x[lvl]; past the range end the row is done.
      descend = false;
      continue;
    }
    partial[lvl] = val;
    if (lvl == 0) {
      if (!is_zero_vec(x)) {
        Rat nr = cb(x, r2);
        ensure(nr <= r2, "enumeration radius may only shrink");
        r2 = nr;
      }
      descend = false;
    } else {
      --lvl;
      descend = true;
    }
  }
  if (nodes_used) *nodes_used = nodes;
}

void normalize_sign(IntVec& v) {
  for (const Int& x : v) {
    if (x > 0) return;
    if (x < 0) {
      for (Int& y : v) y = -y;
      return;
    }
  }
}

bool lex_less(const IntVec& a, const IntVec& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

SupSvpResult shortest_vector_sup(const IntegerLattice& L, const RatMat& G,
                                 long node_budget) {
  require_input(G.is_square() && G.rows == L.ambient,
                "G must be square of the ambient dimension");
  require_input(L.rank() > 0, "lattice must be nonzero");
  require_input(det(G) != 0, "G must be nonsingular");
  int r = L.rank();

  std::vector<RatVec> image(r);
  for (int i = 0; i < r; ++i) image[i] = G * to_rat(L.basis[i]);

  // LLL preprocessing; reduced vectors seed the initial sup-norm bound.
  LllResult red = lll_reduce(image, Rat(1));

  auto coeffs_to_vec = [&](const IntVec& co) {
    IntVec v(L.ambient, Int(0));
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < L.ambient; ++j) v[j] += co[i] * L.basis[i][j];
    return v;
  };

  SupSvpResult best;
  auto consider = [&](const IntVec& reduced_coeffs) {
    // Map coefficients in the reduced basis back to the original basis.
    IntVec co(r, Int(0));
    for (int j = 0; j < r; ++j)
      for (int i = 0; i < r; ++i) co[i] += red.U(i, j) * reduced_coeffs[j];
    IntVec v = coeffs_to_vec(co);
    RatVec img = G * to_rat(v);
    Rat val = sup_norm(img);
    normalize_sign(v);
    IntVec cn = co;
    normalize_sign(cn);
    if (best.vec.empty() || val < best.value ||
        (val == best.value && lex_less(v, best.vec))) {
      best.coeffs = cn;
      best.vec = v;
      best.value = val;
    }
  };

  for (int i = 0; i < r; ++i) {
    IntVec e(r, Int(0));
    e[i] = 1;
    consider(e);
  }

  // Certified sweep: any vector with sup norm <= V has Euclidean norm^2 <=
  // dim * V^2, so the Euclidean ball of that radius contains every candidate.
  RatMat gram(r, r);
  size_t dim = image[0].size();
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      Rat s = 0;
      for (size_t k = 0; k < dim; ++k) s += red.basis[i][k] * red.basis[j][k];
      gram(i, j) = s;
      gram(j, i) = s;
    }
  Rat dimq(static_cast<long>(dim));
  enumerate_quadratic(
      gram, dimq * best.value * best.value,
      [&](const IntVec& xcoef, const Rat& r2) {
        consider(xcoef);
        Rat cap = dimq * best.value * best.value;
        return std::min(r2, cap);
      },
      node_budget, &best.nodes);
  return best;
}

}  // namespace efflevi
