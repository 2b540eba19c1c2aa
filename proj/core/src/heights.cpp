#include "efflevi/heights.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include "efflevi/hnf.hpp"

namespace efflevi {

void validate(const SElement& g) {
  require_input(!g.places.empty(), "element has no places");
  require_input(g.places.size() == g.components.size(),
                "places and components must align");
  bool has_inf = false;
  for (size_t i = 0; i < g.places.size(); ++i) {
    const Place& v = g.places[i];
    if (v.infinite) {
      has_inf = true;
    } else {
      require_input(v.p >= 2, "finite place must be at least 2");
      require_input(mpz_probab_prime_p(v.p.get_mpz_t(), 40) > 0,
                    "finite place must be prime");
    }
    for (size_t j = i + 1; j < g.places.size(); ++j)
      require_input(!(g.places[i] == g.places[j]), "places must be distinct");
  }
  require_input(has_inf, "the archimedean place must be in S");
  int N = g.dim();
  require_input(N >= 1, "components must be nonempty");
  for (const RatMat& m : g.components) {
    require_input(m.rows == N && m.cols == N,
                  "components must be square of equal size");
    require_input(det(m) == 1, "every component must have determinant 1");
  }
}

Rat place_abs(const Rat& x, const Place& v) {
  if (x == 0) return Rat(0);
  if (v.infinite) return abs(x);
  long val = valuation(x, v.p);
  Int pw = pow_int(v.p, static_cast<unsigned long>(val < 0 ? -val : val));
  return val >= 0 ? Rat(Int(1), pw) : Rat(pw);
}

Rat place_norm(const RatVec& w, const Place& v) {
  Rat best(0);
  for (const Rat& x : w) best = std::max(best, place_abs(x, v));
  return best;
}

Rat place_norm(const RatMat& w, const Place& v) {
  return place_norm(w.a, v);
}

Rat c_S(const std::vector<Place>& S, const std::vector<RatVec>& w) {
  require_input(S.size() == w.size(), "one value per place required");
  Rat prod(1);
  for (size_t i = 0; i < S.size(); ++i) {
    Rat n = place_norm(w[i], S[i]);
    require_input(n != 0, "zero component has no content");
    prod *= n;
  }
  return prod;
}

Rat c_S(const std::vector<Place>& S, const std::vector<RatMat>& w) {
  std::vector<RatVec> flat;
  flat.reserve(w.size());
  for (const RatMat& m : w) flat.push_back(m.a);
  return c_S(S, flat);
}

namespace {

// Valuation data for one finite place. After clearing denominators the
// evaluation of a coefficient vector c satisfies
//   |eval(c)|_p = p^(shift - v_p(A c)),
// so the congruence classes of A c modulo powers of p stratify the
// coefficient lattice by the finite part of the content. cap bounds v_p(A c)
// over primitive c via the Smith divisors of A.
struct PlaceValuation {
  Int p;
  IntMat A;
  long shift = 0;
  long cap = 0;
};

PlaceValuation place_valuation(const RatMat& eval, const Int& p) {
  Int d(1);
  for (const Rat& x : eval.a) d = lcm(d, den(x));
  PlaceValuation pv;
  pv.p = p;
  pv.A = IntMat(eval.rows, eval.cols);
  for (int i = 0; i < eval.rows; ++i)
    for (int j = 0; j < eval.cols; ++j) {
      Rat y = Rat(d) * eval(i, j);
      ensure(den(y) == 1, "cleared entry must be integral");
      pv.A(i, j) = num(y);
    }
  pv.shift = valuation(d, p);
  for (const Int& s : smith_normal_form(pv.A).divisors()) {
    ensure(s != 0, "evaluation must have independent columns");
    pv.cap = std::max(pv.cap, valuation(s, p));
  }
  return pv;
}

// Integer basis of {c : A c = 0 mod q}, as the columns of a square matrix.
IntMat congruence_basis(const IntMat& A, const Int& q) {
  IntMat M(A.rows, A.cols + A.rows);
  for (int i = 0; i < A.rows; ++i) {
    for (int j = 0; j < A.cols; ++j) M(i, j) = A(i, j);
    M(i, A.cols + i) = q;
  }
  std::vector<IntVec> ker = kernel_saturated_basis(M);
  ensure(static_cast<int>(ker.size()) == A.cols,
         "congruence lattice must have full rank");
  IntMat B(A.cols, A.cols);
  for (int j = 0; j < A.cols; ++j)
    for (int i = 0; i < A.cols; ++i) B(i, j) = ker[j][i];
  return B;
}

struct EnumProblem {
  std::vector<RatVec> cols;  // archimedean images of the coefficient basis
  Rat dim_factor;  // Euclidean-vs-sup slack of the archimedean evaluation
  std::function<Rat(const IntVec&)> content;
  std::vector<PlaceValuation> finite;
};

RatMat self_gram(const std::vector<RatVec>& cols) {
  int m = static_cast<int>(cols.size());
  RatMat gram(m, m);
  for (int i = 0; i < m; ++i)
    for (int j = i; j < m; ++j) {
      Rat s(0);
      for (size_t k = 0; k < cols[i].size(); ++k) s += cols[i][k] * cols[j][k];
      gram(i, j) = s;
      gram(j, i) = s;
    }
  return gram;
}

HeightResult minimize_content(const EnumProblem& prob, long node_budget) {
  int m = static_cast<int>(prob.cols.size());
  HeightResult res;
  bool have = false;
  auto consider = [&](const IntVec& w) {
    IntVec v = w;
    Int g = content(v);
    if (g > 1)
      for (Int& x : v) x /= g;
    normalize_sign(v);
    Rat p = prob.content(v);
    if (!have || p < res.min_c ||
        (p == res.min_c && lex_less(v, res.witness))) {
      have = true;
      res.min_c = p;
      res.witness = v;
    }
  };
  for (int i = 0; i < m; ++i) {
    IntVec e(m, Int(0));
    e[i] = 1;
    consider(e);
  }
  ensure(have, "at least one seed candidate is required");

  // A primitive minimizer whose finite valuations are v_p(A_t c) = k_t lies
  // in the sublattice A_t c = 0 mod p_t^{k_t}, where its archimedean sup
  // norm is at most min_c * prod p_t^(k_t - shift_t). Enumerating every
  // valuation pattern inside its own sublattice with that radius is
  // exhaustive, and the Smith caps bound the patterns. Each sublattice is
  // enumerated in its own LLL reduced frame; map sends reduced coordinates
  // back to the coefficient lattice, so primitivity is checked after the
  // map. Deep strata run first so the shallow ones, which dominate the
  // lattice point counts, prune against an already good bound.
  std::vector<long> k;
  for (const PlaceValuation& f : prob.finite) k.push_back(f.cap);
  while (true) {
    IntMat B = IntMat::identity(m);
    Rat fac(1);
    for (size_t t = 0; t < prob.finite.size(); ++t) {
      const PlaceValuation& f = prob.finite[t];
      if (k[t] > 0)
        B = B * congruence_basis(f.A * B,
                                 pow_int(f.p, static_cast<unsigned long>(k[t])));
      long e = k[t] - f.shift;
      if (e >= 0)
        fac *= pow_int(f.p, static_cast<unsigned long>(e));
      else
        fac /= pow_int(f.p, static_cast<unsigned long>(-e));
    }
    std::vector<RatVec> cols(m, RatVec(prob.cols[0].size(), Rat(0)));
    for (int j = 0; j < m; ++j)
      for (int i = 0; i < m; ++i)
        if (B(i, j) != 0)
          for (size_t r = 0; r < cols[j].size(); ++r)
            cols[j][r] += Rat(B(i, j)) * prob.cols[i][r];
    LllResult red = lll_reduce(cols, Rat(1));
    IntMat map = B * red.U;
    for (int j = 0; j < m; ++j) {
      IntVec c(m);
      for (int i = 0; i < m; ++i) c[i] = map(i, j);
      consider(c);
    }
    auto radius = [&]() -> Rat {
      Rat t = res.min_c * fac;
      return prob.dim_factor * t * t;
    };
    long used = 0;
    enumerate_quadratic(
        self_gram(red.basis), radius(),
        [&](const IntVec& w, const Rat& r2) {
          IntVec c(m, Int(0));
          for (int j = 0; j < m; ++j)
            if (w[j] != 0)
              for (int i = 0; i < m; ++i) c[i] += map(i, j) * w[j];
          consider(c);
          Rat r = radius();
          return std::min(r2, r);
        },
        node_budget - res.nodes, &used);
    res.nodes += used;
    if (k.empty()) break;
    size_t t = 0;
    while (t < k.size() && --k[t] < 0) {
      k[t] = prob.finite[t].cap;
      ++t;
    }
    if (t == k.size()) break;
  }
  res.value = Rat(1) / res.min_c;
  return res;
}

}  // namespace

HeightResult height_S(const SElement& g, long node_budget) {
  validate(g);
  int N = g.dim();
  EnumProblem prob;
  prob.content = [&g](const IntVec& w) {
    RatVec wr = to_rat(w);
    Rat prod(1);
    for (size_t i = 0; i < g.places.size(); ++i)
      prod *= place_norm(g.components[i] * wr, g.places[i]);
    return prod;
  };
  const RatMat* ginf = nullptr;
  for (size_t i = 0; i < g.places.size(); ++i) {
    if (g.places[i].infinite)
      ginf = &g.components[i];
    else
      prob.finite.push_back(place_valuation(g.components[i], g.places[i].p));
  }
  for (int j = 0; j < N; ++j) prob.cols.push_back(ginf->col(j));
  prob.dim_factor = Rat(N);
  return minimize_content(prob, node_budget);
}

HeightResult height_adjoint(const SElement& g, const LieSubalgebra* L,
                            long node_budget) {
  validate(g);
  int N = g.dim();
  require_input(N >= 2, "adjoint height needs N at least 2");
  LieSubalgebra full;
  if (!L) {
    std::vector<IntVec> units;
    for (int i = 0; i < sl_dim(N); ++i) {
      IntVec e(sl_dim(N), Int(0));
      e[i] = 1;
      units.push_back(e);
    }
    full = lie_from_coord_span(N, units, false);
  }
  const LieSubalgebra& lat = L ? *L : full;
  require_input(lat.N == N, "module rank must match the element");
  require_input(lat.dim() >= 1, "zero module has no height");
  if (L)
    require_input(is_saturated(lat.coords, sl_dim(N)),
                  "module basis must be saturated");
  int M = lat.dim();

  std::vector<RatMat> inv;
  for (const RatMat& c : g.components) inv.push_back(inverse(c));

  EnumProblem prob;
  prob.content = [&g, &lat, &inv](const IntVec& c) {
    IntMat x(lat.N, lat.N);
    for (int i = 0; i < lat.dim(); ++i)
      if (c[i] != 0) x = x + c[i] * lat.basis[i];
    RatMat xr = to_rat(x);
    Rat prod(1);
    for (size_t i = 0; i < g.places.size(); ++i)
      prod *= place_norm(g.components[i] * xr * inv[i], g.places[i]);
    return prod;
  };

  int inf_idx = 0;
  for (size_t i = 0; i < g.places.size(); ++i) {
    if (g.places[i].infinite) {
      inf_idx = static_cast<int>(i);
      continue;
    }
    RatMat E(N * N, M);
    for (int j = 0; j < M; ++j) {
      RatMat y = g.components[i] * to_rat(lat.basis[j]) * inv[i];
      for (int r = 0; r < N * N; ++r) E(r, j) = y.a[r];
    }
    prob.finite.push_back(place_valuation(E, g.places[i].p));
  }
  for (int i = 0; i < M; ++i) {
    RatMat y = g.components[inf_idx] * to_rat(lat.basis[i]) * inv[inf_idx];
    prob.cols.push_back(y.a);
  }
  prob.dim_factor = Rat(static_cast<long>(N) * N);
  return minimize_content(prob, node_budget);
}

SiegelReduction siegel_reduce(const RatMat& g, const Rat& delta) {
  require_input(g.is_square() && g.rows >= 1, "element must be square");
  require_input(det(g) == 1, "determinant must be 1");
  require_input(Rat(1, 4) < delta && delta <= 1,
                "delta must lie in (1/4, 1]");
  int N = g.rows;
  std::vector<RatVec> cols;
  for (int j = 0; j < N; ++j) cols.push_back(g.col(j));
  LllResult red = lll_reduce(cols, delta);

  SiegelReduction out;
  out.gamma = red.U;
  if (det(out.gamma) == -1) {
    for (int i = 0; i < N; ++i) out.gamma(i, N - 1) = -out.gamma(i, N - 1);
    for (Rat& x : red.basis[N - 1]) x = -x;
  }
  ensure(det(out.gamma) == 1, "reduction matrix must be unimodular");
  out.reduced = g * to_rat(out.gamma);
  for (int j = 0; j < N; ++j)
    ensure(out.reduced.col(j) == red.basis[j],
           "reduced columns must match the LLL basis");

  out.profile = gram_profile(red.basis);
  const RatVec& b2 = out.profile.b2;
  Rat lovasz = 4 * delta - 1;
  for (int i = 0; i + 1 < N; ++i)
    ensure(b2[i] * lovasz <= b2[i + 1] * 4, "Lovasz ratio must hold");
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      ensure(abs(out.profile.mu(i, j)) * 2 <= 1,
             "size reduction must hold");

  // Exact Gram reconstruction: G = U^T diag(b2) U with unitriangular U.
  for (int i = 0; i < N; ++i)
    for (int j = i; j < N; ++j) {
      Rat lhs(0);
      for (size_t k = 0; k < red.basis[i].size(); ++k)
        lhs += red.basis[i][k] * red.basis[j][k];
      Rat rhs(0);
      for (int k = 0; k <= i; ++k) {
        Rat mki = (k == i) ? Rat(1) : out.profile.mu(k, i);
        Rat mkj = (k == j) ? Rat(1) : out.profile.mu(k, j);
        rhs += b2[k] * mki * mkj;
      }
      ensure(lhs == rhs, "Gram reconstruction must be exact");
    }

  out.a_sup_squared = Rat(1);
  for (int i = 0; i < N; ++i) {
    out.a_sup_squared = std::max(out.a_sup_squared, b2[i]);
    Rat invb = Rat(1) / b2[i];
    out.a_sup_squared = std::max(out.a_sup_squared, invb);
  }
  return out;
}

bool PowerBound::leq(const Rat& x) const {
  if (x <= 0) return false;
  return base_sq <= pow_rat(x, 2 * root);
}

bool PowerBound::geq(const Rat& x) const {
  if (x <= 0) return true;
  return base_sq >= pow_rat(x, 2 * root);
}

bool PowerBound::exact_value(Rat* out) const {
  return exact_root(base_sq, 2 * root, out);
}

double PowerBound::approx() const {
  return std::pow(base_sq.get_d(), 1.0 / (2.0 * root));
}

double QuadRt3::approx() const {
  return a.get_d() + b.get_d() * std::sqrt(3.0);
}

QuadRt3 operator+(const QuadRt3& x, const QuadRt3& y) {
  return QuadRt3{x.a + y.a, x.b + y.b};
}

QuadRt3 operator*(const QuadRt3& x, const QuadRt3& y) {
  return QuadRt3{x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}

QuadRt3 unipotent_conjugation_constant(int N) {
  require_input(N >= 1, "rank must be positive");
  // (r^N - 1)/(r - 1) = sum of r^k for k < N, with r = 2/sqrt(3).
  QuadRt3 r{Rat(0), Rat(2, 3)};
  QuadRt3 pw{Rat(1), Rat(0)};
  QuadRt3 sum{Rat(0), Rat(0)};
  for (int k = 0; k < N; ++k) {
    sum = sum + pw;
    pw = pw * r;
  }
  QuadRt3 s = sum + QuadRt3{Rat(1), Rat(0)};
  return QuadRt3{s.a / 2, s.b / 2};
}

HtBounds ht_bounds_from_profile(const SiegelReduction& red) {
  int N = static_cast<int>(red.profile.b2.size());
  require_input(N >= 2, "bounds need rank at least 2");
  for (int i = 0; i + 1 < N; ++i)
    require_input(red.profile.b2[i] * 3 <= red.profile.b2[i + 1] * 4,
                  "bounds need a delta 1 reduction");
  HtBounds out;
  out.a_sup_squared = red.a_sup_squared;
  out.lower = PowerBound{red.a_sup_squared, N - 1};
  out.upper = PowerBound{red.a_sup_squared, 1};
  out.scale = unipotent_conjugation_constant(N);
  return out;
}

Rat injectivity_constant(int N) {
  require_input(N >= 2, "rank must be at least 2");
  // Entry bounds after conjugating the unipotent part through a: u has
  // entries within 1/2 and a_i/a_j <= (2/sqrt3)^(j-i) <= (7/6)^(j-i), the
  // inverse picks up (3/2)^(d-1) on the d-th superdiagonal. Operator norms
  // cost a factor N each, the exponential ball comparison costs 1/(2N).
  Rat fwd = Rat(1, 2) * pow_rat(Rat(7, 6), N - 1);
  Rat inv = Rat(1, 2) * pow_rat(Rat(3, 2), N - 2) * pow_rat(Rat(7, 6), N - 1);
  Rat m_fwd = std::max(Rat(1), fwd);
  Rat m_inv = std::max(Rat(1), inv);
  Rat nn(static_cast<long>(N));
  return Rat(1) / (2 * pow_rat(nn, 5) * m_fwd * m_inv);
}

InjectivityRadius injectivity_radius_lower(const RatMat& g) {
  SiegelReduction red = siegel_reduce(g);
  InjectivityRadius out;
  out.a_sup_squared = red.a_sup_squared;
  out.c_n = injectivity_constant(g.rows);
  out.eta = out.c_n / red.a_sup_squared;
  out.eta_sq = out.eta * out.eta;
  return out;
}

}  // namespace efflevi
