// Acceptance gate: one line per criterion, exit code equals the number of
// failed criteria. Oracles are implemented inline so that each criterion
// checks the library against independent arithmetic.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "efflevi/fixtures.hpp"
#include "efflevi/harness.hpp"
#include "efflevi/heights.hpp"
#include "efflevi/hnf.hpp"
#include "efflevi/json_io.hpp"
#include "efflevi/levi.hpp"
#include "efflevi/lie.hpp"
#include "efflevi/matrix.hpp"
#include "efflevi/rng.hpp"
#include "efflevi/siegel.hpp"
#include "efflevi/unipotent.hpp"

using namespace efflevi;
using Json = nlohmann::ordered_json;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double x, int prec = 2) {
  std::ostringstream o;
  o << std::fixed << std::setprecision(prec) << x;
  return o.str();
}

// Incremental row-reduced span over Q, the shared inline oracle for rank,
// membership and independence checks.
struct SpanQ {
  int dim;
  std::vector<RatVec> rows;  // mutually reduced, one pivot each
  std::vector<int> pivots;

  explicit SpanQ(int d) : dim(d) {}

  RatVec residue(RatVec v) const {
    for (size_t r = 0; r < rows.size(); ++r) {
      Rat c = v[pivots[r]];
      if (c == 0) continue;
      for (int j = 0; j < dim; ++j) v[j] -= c * rows[r][j];
    }
    return v;
  }

  bool member(const RatVec& v) const { return is_zero_vec(residue(v)); }

  // Adds v if it enlarges the span; returns whether it did.
  bool add(const RatVec& v) {
    RatVec r = residue(v);
    int p = -1;
    for (int j = 0; j < dim; ++j)
      if (r[j] != 0) {
        p = j;
        break;
      }
    if (p < 0) return false;
    Rat inv = Rat(1) / r[p];
    for (int j = 0; j < dim; ++j) r[j] = r[j] * inv;
    for (size_t t = 0; t < rows.size(); ++t) {
      Rat c = rows[t][p];
      if (c == 0) continue;
      for (int j = 0; j < dim; ++j) rows[t][j] -= c * r[j];
    }
    rows.push_back(std::move(r));
    pivots.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows.size()); }
};

RatVec flat(const RatMat& m) { return m.a; }

RatVec flat(const IntMat& m) { return to_rat(m).a; }

Int det_cofactor(const IntMat& m) {
  if (m.rows == 1) return m(0, 0);
  Int s = 0;
  for (int j = 0; j < m.cols; ++j) {
    if (m(0, j) == 0) continue;
    IntMat minor(m.rows - 1, m.cols - 1);
    for (int r = 1; r < m.rows; ++r)
      for (int c = 0, t = 0; c < m.cols; ++c)
        if (c != j) minor(r - 1, t++) = m(r, c);
    Int term = m(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      s += term;
    else
      s -= term;
  }
  return s;
}

double ols_slope(const std::vector<double>& xs, const std::vector<double>& ys,
                 bool* degenerate) {
  size_t n = xs.size();
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (n < 2 || sxx < 1e-9) {
    *degenerate = true;
    return 0.0;
  }
  *degenerate = false;
  return sxy / sxx;
}

IntMat random_int_mat(Rng& rng, int rows, int cols, long bound) {
  IntMat m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = Int(rng.uniform(-bound, bound));
  return m;
}

IntMat random_traceless(Rng& rng, int N, long bound) {
  IntMat w = random_int_mat(rng, N, N, bound);
  Int s = 0;
  for (int i = 0; i + 1 < N; ++i) s += w(i, i);
  w(N - 1, N - 1) = -s;
  return w;
}

IntMat random_strict_upper(Rng& rng, int N, long bound) {
  IntMat w(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) w(i, j) = Int(rng.uniform(-bound, bound));
  return w;
}

RatMat random_unitriangular(Rng& rng, int N, bool upper, long pb, long qb) {
  RatMat m = RatMat::identity(N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j) {
      Rat x = rat(rng.uniform(-pb, pb), rng.uniform(1, qb));
      if (upper)
        m(i, j) = x;
      else
        m(j, i) = x;
    }
  return m;
}

// Determinant-one rational matrix: unitriangular factors around a diagonal
// with telescoping entries r_i / r_{i+1}.
RatMat random_sl_rat(Rng& rng, int N, long pb, long qb, long rb) {
  RatMat L = random_unitriangular(rng, N, false, pb, qb);
  RatMat U = random_unitriangular(rng, N, true, pb, qb);
  std::vector<long> r(N + 1);
  for (int i = 0; i < N; ++i) r[i] = rng.uniform(1, rb);
  r[N] = r[0];
  RatMat D(N, N);
  for (int i = 0; i < N; ++i) D(i, i) = rat(r[i], r[i + 1]);
  return L * D * U;
}

bool entries_within(const RatMat& g, long cap) {
  for (const Rat& x : g.a)
    if (abs(num(x)) > cap || den(x) > cap) return false;
  return true;
}

SElement at_inf(const RatMat& g) {
  SElement e;
  e.places = {inf_place()};
  e.components = {g};
  return e;
}

// ---------------------------------------------------------------------------
// criterion 1: kernel vectors meet the determinant bound and span the kernel

Outcome criterion1() {
  Rng rng(101);
  long instances = 0;
  long enum_used = 0;
  for (int M = 1; M <= 4; ++M)
    for (int N = M + 1; N <= 5; ++N)
      for (int rep = 0; rep < 500; ++rep) {
        IntMat A(M, N);
        while (true) {
          A = random_int_mat(rng, M, N, 3);
          SpanQ rows(N);
          bool full = true;
          for (int i = 0; i < M; ++i)
            if (!rows.add(to_rat(A.row(i)))) {
              full = false;
              break;
            }
          if (full) break;
        }
        SiegelKernelResult kr = siegel_kernel_basis(A);
        Int bound = det_cofactor(A * A.transpose());
        std::string shape =
            std::to_string(M) + "x" + std::to_string(N) + " rep " +
            std::to_string(rep);
        if (kr.det_bound != bound)
          return {false, "determinant bound mismatch at " + shape};
        if (static_cast<int>(kr.basis.size()) != N - M)
          return {false, "kernel dimension mismatch at " + shape};
        SpanQ span(N);
        for (const IntVec& v : kr.basis) {
          if (!is_zero_vec(A * v))
            return {false, "vector outside the kernel at " + shape};
          for (const Int& x : v) {
            Int sq = x * x;
            if (sq > bound) return {false, "entry bound violated at " + shape};
          }
          if (!span.add(to_rat(v)))
            return {false, "dependent kernel basis at " + shape};
        }
        enum_used += kr.enumeration_used ? 1 : 0;
        ++instances;
      }
  return {true, std::to_string(instances) +
                    " instances across 10 shapes, bound exact, kernels match "
                    "the elimination oracle, enumeration used on " +
                    std::to_string(enum_used)};
}

// ---------------------------------------------------------------------------
// criterion 2: extracted bases stay saturated prefix by prefix and obey the
// additive norm bound

Outcome criterion2() {
  Rng rng(102);
  for (int k = 0; k < 1000; ++k) {
    int n = static_cast<int>(rng.uniform(1, 6));
    int m = static_cast<int>(rng.uniform(1, n));
    std::vector<IntVec> b;
    while (true) {
      b.clear();
      SpanQ span(n);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) {
        IntVec row(n);
        for (int j = 0; j < n; ++j) row[j] = Int(rng.uniform(-5, 5));
        ok = span.add(to_rat(row));
        b.push_back(row);
      }
      if (ok) break;
    }
    IntMat C(m, m);
    while (true) {
      C = random_int_mat(rng, m, m, 4);
      SpanQ span(m);
      bool ok = true;
      for (int i = 0; i < m && ok; ++i) ok = span.add(to_rat(C.row(i)));
      if (ok) break;
    }
    std::vector<IntVec> u(m, IntVec(n, Int(0)));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        for (int t = 0; t < n; ++t) u[i][t] += C(i, j) * b[j][t];

    std::vector<IntVec> v = extract_small_basis(IntegerLattice(n, b), u);
    std::string tag = " at instance " + std::to_string(k);
    if (static_cast<int>(v.size()) != m)
      return {false, "wrong basis size" + tag};
    Int budget = 0;
    SpanQ uspan(n);
    std::vector<IntVec> coords;
    for (int i = 0; i < m; ++i) {
      budget += sup_norm(u[i]);
      if (sup_norm(v[i]) > budget)
        return {false, "norm bound violated" + tag};
      uspan.add(to_rat(u[i]));
      if (!uspan.member(to_rat(v[i])))
        return {false, "prefix span mismatch" + tag};
      IntVec c;
      if (!integer_coordinates(b, n, v[i], &c))
        return {false, "vector outside the lattice" + tag};
      coords.push_back(c);
      for (const Int& d : smith_normal_form(rows_matrix(coords, m)).divisors())
        if (d != 1) return {false, "prefix not saturated" + tag};
    }
  }
  return {true, "1000 instances, prefixes saturated, norm bounds exact"};
}

// ---------------------------------------------------------------------------
// criterion 3: conjugated fixtures always split validly with bounded depth,
// and the height exponent stays put as the conjugator bound grows

Outcome criterion3() {
  Rng rng(103);
  const long bounds[] = {10, 100, 1000};
  int total = 0;
  int max_depth = 0;
  double worst_drift = -1e300;
  for (const std::string& name : fixture_names()) {
    Fixture fx = fixture(name);
    int N = fx.algebra.N;
    double slope[3];
    for (int bi = 0; bi < 3; ++bi) {
      std::vector<double> xs, ys;
      for (int k = 0; k < 200; ++k) {
        IntMat gamma = random_conjugator(N, bounds[bi], rng);
        IntMat ginv = inverse_unimodular(gamma);
        auto conj = [&](const LieSubalgebra& a) {
          std::vector<IntVec> cs;
          for (const IntMat& x : a.basis)
            cs.push_back(sl_coords_int(gamma * x * ginv));
          return lie_from_coord_span(N, cs, false);
        };
        LieSubalgebra g2 = conj(fx.algebra);
        LieSubalgebra keep2;
        if (fx.has_keep) keep2 = conj(fx.keep);
        LeviResult lr = effective_levi(g2, fx.has_keep ? &keep2 : nullptr);
        ++total;
        if (!levi_valid(g2, lr.h, fx.has_keep ? &keep2 : nullptr))
          return {false, "invalid decomposition on " + name + " at B " +
                             std::to_string(bounds[bi])};
        if (lr.depth > derived_series(lr.r).derived_length)
          return {false, "depth exceeds the derived length on " + name};
        if (lr.depth > max_depth) max_depth = lr.depth;
        xs.push_back(log_int(lr.ht_g));
        ys.push_back(log_int(lr.ht_h));
      }
      bool degenerate = false;
      slope[bi] = ols_slope(xs, ys, &degenerate);
      if (degenerate && bounds[bi] >= 100)
        return {false, "degenerate slope cell on " + name + " at B " +
                           std::to_string(bounds[bi])};
    }
    double drift = slope[2] - slope[1];
    if (drift > worst_drift) worst_drift = drift;
    if (drift >= 0.5)
      return {false, "slope drift " + fmt(drift) + " on " + name};
  }
  return {true, std::to_string(total) +
                    " decompositions all valid, max depth " +
                    std::to_string(max_depth) + ", worst slope drift " +
                    fmt(worst_drift)};
}

// ---------------------------------------------------------------------------
// criterion 4: the radical is a solvable ideal and no outside basis direction
// extends it to a larger solvable ideal

std::vector<RatMat> derived_inline(const std::vector<RatMat>& basis) {
  if (basis.empty()) return {};
  SpanQ span(basis[0].rows * basis[0].cols);
  std::vector<RatMat> out;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) {
      RatMat b = basis[i] * basis[j] - basis[j] * basis[i];
      if (span.add(flat(b))) out.push_back(b);
    }
  return out;
}

bool solvable_inline(std::vector<RatMat> cur) {
  size_t prev = cur.size() + 1;
  while (!cur.empty() && cur.size() < prev) {
    prev = cur.size();
    cur = derived_inline(cur);
  }
  return cur.empty();
}

bool ideal_inline(const std::vector<RatMat>& g, const std::vector<RatMat>& s) {
  if (s.empty()) return true;
  SpanQ span(s[0].rows * s[0].cols);
  for (const RatMat& x : s) span.add(flat(x));
  for (const RatMat& x : g)
    for (const RatMat& y : s)
      if (!span.member(flat(x * y - y * x))) return false;
  return true;
}

// Closure of gens under the bracket; empty when it grows past max_dim.
std::vector<RatMat> closure_inline(std::vector<RatMat> gens, int max_dim) {
  if (gens.empty()) return {};
  SpanQ span(gens[0].rows * gens[0].cols);
  std::vector<RatMat> basis;
  for (RatMat& g : gens)
    if (span.add(flat(g))) basis.push_back(std::move(g));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < i; ++j) {
      RatMat b = basis[i] * basis[j] - basis[j] * basis[i];
      if (span.add(flat(b))) {
        basis.push_back(std::move(b));
        if (static_cast<int>(basis.size()) > max_dim) return {};
      }
    }
  return basis;
}

Outcome check_radical(const LieSubalgebra& g, int expected_dim,
                      const std::string& tag) {
  LieSubalgebra r = radical(g);
  if (expected_dim >= 0 && r.dim() != expected_dim)
    return {false, "radical dimension " + std::to_string(r.dim()) +
                       " instead of " + std::to_string(expected_dim) + tag};
  std::vector<RatMat> gb, rb;
  for (const IntMat& x : g.basis) gb.push_back(to_rat(x));
  for (const IntMat& x : r.basis) rb.push_back(to_rat(x));
  SpanQ gspan(g.N * g.N);
  for (const RatMat& x : gb) gspan.add(flat(x));
  for (const RatMat& x : rb)
    if (!gspan.member(flat(x)))
      return {false, "radical leaves the algebra" + tag};
  if (!ideal_inline(gb, rb)) return {false, "radical is not an ideal" + tag};
  if (!solvable_inline(rb)) return {false, "radical is not solvable" + tag};
  SpanQ rspan(g.N * g.N);
  for (const RatMat& x : rb) rspan.add(flat(x));
  for (const IntMat& xi : g.basis) {
    RatMat x = to_rat(xi);
    if (rspan.member(flat(x))) continue;
    std::vector<RatMat> ext = rb;
    ext.push_back(x);
    if (ideal_inline(gb, ext) && solvable_inline(ext))
      return {false, "radical is not maximal" + tag};
  }
  return {true, ""};
}

Outcome criterion4() {
  struct Expected {
    const char* name;
    int dim_r;
  };
  const Expected expected[] = {
      {"sl2_block_sl3", 0},       {"sl2_block_sl4", 0},
      {"sl2_semidirect", 2},      {"heisenberg_sl3", 3},
      {"nilradical_borel_sl4", 6}, {"sl2_sl2_sl4", 0},
      {"sl2_plus_abelian_sl4", 1}};
  for (const std::string& name : fixture_names()) {
    int dim_r = -2;
    for (const Expected& e : expected)
      if (name == e.name) dim_r = e.dim_r;
    if (dim_r == -2) return {false, "fixture " + name + " missing a record"};
    Outcome o = check_radical(fixture(name).algebra, dim_r, " on " + name);
    if (!o.pass) return o;
  }

  Rng rng(104);
  for (int k = 0; k < 500; ++k) {
    std::string tag = " at sample " + std::to_string(k);
    int family = k % 3;
    std::vector<RatMat> basis;
    int N = 0;
    int expected_dim = -1;
    if (family == 0) {
      N = 2 + static_cast<int>(rng.uniform(0, 2));
      basis = closure_inline({to_rat(random_traceless(rng, N, 2))}, 5);
      expected_dim = static_cast<int>(basis.size());
    } else if (family == 1) {
      while (basis.empty()) {
        N = 3 + static_cast<int>(rng.uniform(0, 1));
        basis = closure_inline({to_rat(random_strict_upper(rng, N, 3)),
                                to_rat(random_strict_upper(rng, N, 3))},
                               5);
      }
      expected_dim = static_cast<int>(basis.size());
    } else {
      N = 3;
      RatMat e(3, 3), f(3, 3), h(3, 3);
      e(0, 1) = 1;
      f(1, 0) = 1;
      h(0, 0) = 1;
      h(1, 1) = -1;
      IntMat gamma = random_conjugator(3, 3, rng);
      RatMat c = to_rat(gamma);
      RatMat cinv = to_rat(inverse_unimodular(gamma));
      basis = {c * e * cinv, c * f * cinv, c * h * cinv};
      expected_dim = 0;
    }
    LieSubalgebra g = lie_span(N, basis, true);
    if (g.dim() > 5) return {false, "oversized sample" + tag};
    Outcome o = check_radical(g, expected_dim, tag);
    if (!o.pass) return o;
  }
  return {true, "7 fixtures and 500 random subalgebras, radicals are maximal "
                "solvable ideals"};
}

// ---------------------------------------------------------------------------
// criterion 5: reduction profiles meet the exact Lovasz and size bounds, and
// the measured sandwich constants are stable across half-samples

Outcome criterion5() {
  Rng rng(105);
  std::vector<double> d_low[5], d_high[5];
  for (int k = 0; k < 1000; ++k) {
    int N = 2 + k % 3;
    RatMat g(0, 0);
    do {
      g = random_sl_rat(rng, N, 5, 5, 5);
    } while (!entries_within(g, 1000));
    SiegelReduction red = siegel_reduce(g);
    std::string tag = " at sample " + std::to_string(k);
    int n = static_cast<int>(red.profile.b2.size());
    for (int i = 0; i + 1 < n; ++i) {
      Rat lhs = red.profile.b2[i] * 3;
      Rat rhs = red.profile.b2[i + 1] * 4;
      if (lhs > rhs) return {false, "profile ratio above 4/3" + tag};
    }
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        Rat mu2 = abs(red.profile.mu(i, j)) * 2;
        if (mu2 > 1) return {false, "mu above 1/2" + tag};
      }
    HeightResult hr = height_S(at_inf(g));
    double la = 0.5 * log_rat(red.a_sup_squared);
    double x = log_rat(hr.value);
    d_low[N].push_back(la / (N - 1) - x);
    d_high[N].push_back(x - la);
  }
  std::string report;
  for (int N = 2; N <= 4; ++N) {
    double m1 = -1e300, m2 = -1e300;
    double h1[2] = {-1e300, -1e300}, h2[2] = {-1e300, -1e300};
    for (size_t i = 0; i < d_low[N].size(); ++i) {
      if (d_low[N][i] > m1) m1 = d_low[N][i];
      if (d_high[N][i] > m2) m2 = d_high[N][i];
      int half = static_cast<int>(i % 2);
      if (d_low[N][i] > h1[half]) h1[half] = d_low[N][i];
      if (d_high[N][i] > h2[half]) h2[half] = d_high[N][i];
    }
    const double tol = std::log(2.0) + 1e-9;
    if (std::abs(h1[0] - h1[1]) > tol || std::abs(h2[0] - h2[1]) > tol)
      return {false, "sandwich constants unstable at N " + std::to_string(N)};
    if (!report.empty()) report += "; ";
    report += "N=" + std::to_string(N) + ": C=" + fmt(std::exp(m1)) +
              ", C'=" + fmt(std::exp(m1 + m2));
  }
  return {true, "1000 reductions exact, " + report};
}

// ---------------------------------------------------------------------------
// criterion 6: the vector and adjoint heights are polynomially equivalent
// with exponent 2(N-1); caps measured on this seed and pinned with margin

Outcome criterion6() {
  // Measured on this seed: both constants come out at 1.00. Pinned at 4 so
  // the criterion fails loudly if either comparison direction degrades.
  const double kDirectCap = std::log(4.0);
  const double kAdjointCap = std::log(4.0);
  Rng rng(106);
  double max_direct = -1e300, max_adjoint = -1e300;
  for (int k = 0; k < 200; ++k) {
    int N = 2 + k % 2;
    RatMat g(0, 0);
    do {
      g = random_sl_rat(rng, N, 3, 3, 3);
    } while (!entries_within(g, 100));
    Rat ht = height_S(at_inf(g)).value;
    Rat adj = height_adjoint(at_inf(g)).value;
    double d_direct = log_rat(ht) - log_rat(adj);
    double d_adjoint = log_rat(adj) - 2.0 * (N - 1) * log_rat(ht);
    if (d_direct > max_direct) max_direct = d_direct;
    if (d_adjoint > max_adjoint) max_adjoint = d_adjoint;
  }
  if (max_direct > kDirectCap)
    return {false, "direct comparison constant " + fmt(std::exp(max_direct)) +
                       " above the pinned cap"};
  if (max_adjoint > kAdjointCap)
    return {false, "adjoint comparison constant " +
                       fmt(std::exp(max_adjoint)) + " above the pinned cap"};
  return {true, "200 samples, measured C: direct " + fmt(std::exp(max_direct)) +
                    ", adjoint " + fmt(std::exp(max_adjoint))};
}

// ---------------------------------------------------------------------------
// criterion 7: the certified height over primitive vectors equals a brute
// force minimum over all integer vectors in a box that provably contains a
// global minimizer; the product formula makes the integer minimum equal the
// minimum over all S-integral vectors, which the unit scaling checks exhibit

Rat oracle_abs(const Rat& x, const Place& v) {
  if (x == 0) return Rat(0);
  if (v.infinite) return abs(x);
  long e = 0;
  Int n = num(x), d = den(x);
  while (n % v.p == 0) {
    n /= v.p;
    ++e;
  }
  while (d % v.p == 0) {
    d /= v.p;
    --e;
  }
  if (e >= 0) return rat_of(Int(1), pow_int(v.p, static_cast<unsigned long>(e)));
  return Rat(pow_int(v.p, static_cast<unsigned long>(-e)));
}

Rat oracle_content_vec(const SElement& g, const RatVec& u) {
  Rat prod(1);
  for (size_t k = 0; k < g.places.size(); ++k) {
    RatVec gu = g.components[k] * u;
    Rat m(0);
    for (const Rat& x : gu) {
      Rat a = oracle_abs(x, g.places[k]);
      if (a > m) m = a;
    }
    prod *= m;
  }
  return prod;
}

Rat oracle_content(const SElement& g, const IntVec& u) {
  return oracle_content_vec(g, to_rat(u));
}

// Adjugate inverse for the 2x2 and 3x3 elements this criterion draws.
RatMat oracle_inverse(const RatMat& m) {
  int n = m.rows;
  RatMat adj(n, n);
  if (n == 2) {
    adj(0, 0) = m(1, 1);
    adj(0, 1) = -m(0, 1);
    adj(1, 0) = -m(1, 0);
    adj(1, 1) = m(0, 0);
  } else {
    adj(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
    adj(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
    adj(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
    adj(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
    adj(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
    adj(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
    adj(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
    adj(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
    adj(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  }
  Rat d(0);
  for (int j = 0; j < n; ++j) d += m(0, j) * adj(j, 0);
  RatMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = adj(i, j) / d;
  return out;
}

// One exhaustive scan over the integer box |u_i| <= R[i], minimizing the
// content. Works in cleared-denominator int64 arithmetic: per place
// A_k = d_k g_k is integral, |g_inf u|_inf = max|A u| / d and
// |g_p u|_p = p^(s_p - v_p(A u)) with s_p = v_p(d_p). A double prefilter
// with relative slack far above its rounding error skips points that are
// clearly worse than the running best; survivors are compared exactly.
Rat box_scan_min(const SElement& g, const std::vector<long>& R) {
  int N = g.dim();
  int P = static_cast<int>(g.places.size());
  std::vector<std::vector<long>> A(P, std::vector<long>(3 * 3, 0));
  std::vector<long> dclear(P, 1), sshift(P, 0), pr(P, 0);
  for (int k = 0; k < P; ++k) {
    Int d(1);
    for (const Rat& x : g.components[k].a) d = lcm(d, den(x));
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        Rat y = Rat(d) * g.components[k](i, j);
        if (!num(y).fits_slong_p()) return Rat(-1);
        A[k][3 * i + j] = num(y).get_si();
      }
    if (!d.fits_slong_p()) return Rat(-1);
    dclear[k] = d.get_si();
    if (!g.places[k].infinite) {
      pr[k] = g.places[k].p.get_si();
      sshift[k] = valuation(d, g.places[k].p);
    }
  }
  // Exact powers of each finite prime as doubles, offset indexed.
  const int kOff = 96;
  std::vector<std::vector<double>> pw(P, std::vector<double>(2 * kOff, 1.0));
  for (int k = 0; k < P; ++k) {
    if (g.places[k].infinite) continue;
    for (int e = 1; e < kOff; ++e) {
      pw[k][kOff + e] = pw[k][kOff + e - 1] * pr[k];
      pw[k][kOff - e] = pw[k][kOff - e + 1] / pr[k];
    }
  }
  long R1 = R[0], R2 = N > 1 ? R[1] : 0, R3 = N > 2 ? R[2] : 0;
  Rat best(0);
  double best_dbl = 0;
  bool first = true;
  std::vector<std::array<long, 3>> base(P);
  for (long u3 = 0; u3 <= R3; ++u3)
    for (long u2 = (u3 > 0 ? -R2 : 0); u2 <= R2; ++u2) {
      long lo = (u3 > 0 || u2 > 0) ? -R1 : 1;
      for (int k = 0; k < P; ++k)
        for (int i = 0; i < N; ++i)
          base[k][i] = u3 * A[k][3 * i + 2] + u2 * A[k][3 * i + 1] +
                       lo * A[k][3 * i];
      for (long u1 = lo; u1 <= R1; ++u1) {
        double p_dbl = 1.0;
        long m_inf = 0;
        std::array<long, 3> e_fin{0, 0, 0};
        for (int k = 0; k < P; ++k) {
          if (g.places[k].infinite) {
            long m = 0;
            for (int i = 0; i < N; ++i) {
              long a = base[k][i] < 0 ? -base[k][i] : base[k][i];
              if (a > m) m = a;
            }
            m_inf = m;
            p_dbl *= static_cast<double>(m) / static_cast<double>(dclear[k]);
          } else {
            long v = kOff;
            for (int i = 0; i < N && v > 0; ++i) {
              long a = base[k][i];
              if (a == 0) continue;
              long e = 0;
              while (a % pr[k] == 0 && e < v) {
                a /= pr[k];
                ++e;
              }
              if (e < v) v = e;
            }
            e_fin[k] = sshift[k] - v;
            p_dbl *= pw[k][kOff + e_fin[k]];
          }
        }
        if (first || p_dbl <= best_dbl * (1.0 + 1e-9)) {
          Rat pe(m_inf);
          for (int k = 0; k < P; ++k) {
            if (g.places[k].infinite) {
              pe /= Int(dclear[k]);
            } else if (e_fin[k] >= 0) {
              pe *= pow_int(Int(pr[k]), static_cast<unsigned long>(e_fin[k]));
            } else {
              pe /= pow_int(Int(pr[k]), static_cast<unsigned long>(-e_fin[k]));
            }
          }
          if (first || pe < best) {
            best = pe;
            best_dbl = p_dbl;
            first = false;
          }
        }
        for (int k = 0; k < P; ++k)
          for (int i = 0; i < N; ++i) base[k][i] += A[k][3 * i];
      }
    }
  return best;
}

Outcome criterion7() {
  Rng rng(107);
  // An accepted sample is scanned over the full certified box, so the draw
  // is rejected when that box is too large to scan; rejected draws still get
  // the witness and product formula checks. For a primitive u the inverse
  // bound |u|_p <= K_p |g_p u|_p at each finite place forces
  // |g_inf u|_inf <= min_c K_2 K_3 whenever the content is at most min_c,
  // and row sums of the inverse turn that into per coordinate box radii. A
  // better vector missed by the library would make the box even smaller, so
  // equality on the scan certifies the library minimum.
  const double kBoxCap = 3.0e6;
  int accepted = 0, draws = 0, scanned_n3 = 0;
  long max_radius = 0;
  double total_pts = 0;
  while (accepted < 100) {
    ++draws;
    if (draws > 400) return {false, "sampling failed to settle"};
    int N = 2 + accepted % 2;
    SElement g;
    g.places = {inf_place(), finite_place(Int(2)), finite_place(Int(3))};
    for (int c = 0; c < 3; ++c)
      g.components.push_back(random_sl_rat(rng, N, 2, 3, 3));
    validate(g);
    HeightResult hr = height_S(g);
    std::string tag = " at draw " + std::to_string(draws);

    // Bridge identities on every draw, heavy or not.
    if (oracle_content(g, hr.witness) != hr.min_c)
      return {false, "witness does not attain the minimum" + tag};
    if (hr.value * hr.min_c != 1)
      return {false, "height is not the reciprocal minimum" + tag};
    if (content(hr.witness) != 1)
      return {false, "witness is not primitive" + tag};
    for (long s : {2, 3, 6}) {
      RatVec up(hr.witness.size()), down(hr.witness.size());
      for (size_t i = 0; i < hr.witness.size(); ++i) {
        up[i] = Rat(hr.witness[i]) * s;
        down[i] = Rat(hr.witness[i]) / s;
      }
      if (oracle_content_vec(g, up) != hr.min_c ||
          oracle_content_vec(g, down) != hr.min_c)
        return {false, "content is not S-unit invariant" + tag};
    }

    Rat kfin(1);
    for (size_t k = 0; k < g.places.size(); ++k) {
      if (g.places[k].infinite) continue;
      RatMat inv = oracle_inverse(g.components[k]);
      Rat mx(0);
      for (const Rat& x : inv.a) mx = std::max(mx, oracle_abs(x, g.places[k]));
      kfin *= mx;
    }
    RatMat ginv(0, 0);
    for (size_t k = 0; k < g.places.size(); ++k)
      if (g.places[k].infinite) ginv = oracle_inverse(g.components[k]);
    std::vector<long> R(N);
    double pts = 1;
    bool heavy = false;
    for (int i = 0; i < N; ++i) {
      Rat row(0);
      for (int j = 0; j < N; ++j) row += abs(ginv(i, j));
      Int bound = ceil_rat(row * hr.min_c * kfin);
      if (!bound.fits_slong_p()) {
        heavy = true;
        break;
      }
      R[i] = bound.get_si();
      pts *= 2.0 * R[i] + 1.0;
    }
    if (heavy || pts > kBoxCap) continue;
    for (int i = 0; i < N; ++i) max_radius = std::max(max_radius, R[i]);

    for (int i = 0; i < N; ++i)
      if (abs(hr.witness[i]) > R[i])
        return {false, "witness escapes the certified box" + tag};
    Rat best = box_scan_min(g, R);
    if (best < 0) return {false, "box arithmetic overflow" + tag};
    if (hr.min_c != best)
      return {false, "box minimum differs from the certified one" + tag};
    total_pts += pts;
    if (N == 3) ++scanned_n3;
    ++accepted;
  }
  return {true, "100 elements match the box oracle exactly (" +
                    std::to_string(draws - 100) + " heavy draws rechecked, " +
                    std::to_string(scanned_n3) +
                    " of dimension 3, box radius up to " +
                    std::to_string(max_radius) + ")"};
}

// ---------------------------------------------------------------------------
// criterion 8: exact exponential calculus and coordinate reduction

RatMat random_nilpotent_rat(Rng& rng, int N, long pb, long qb) {
  RatMat x(N, N);
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      x(i, j) = rat(rng.uniform(-pb, pb), rng.uniform(1, qb));
  return x;
}

Outcome criterion8() {
  Rng rng(108);
  for (int k = 0; k < 500; ++k) {
    int N = 2 + k % 4;
    RatMat x = random_nilpotent_rat(rng, N, 4, 4);
    if (k % 2 == 1) {
      IntMat gamma = random_conjugator(N, 3, rng);
      x = to_rat(gamma) * x * to_rat(inverse_unimodular(gamma));
    }
    if (log_unipotent(exp_nilpotent(x)) != x)
      return {false, "roundtrip failed at sample " + std::to_string(k)};
  }
  for (int k = 0; k < 500; ++k) {
    int N = 2 + k % 4;
    long fact = 1;
    for (int t = 2; t <= N; ++t) fact *= t;
    IntMat n = random_strict_upper(rng, N, 3);
    if (k % 2 == 1) {
      IntMat gamma = random_conjugator(N, 3, rng);
      n = gamma * n * inverse_unimodular(gamma);
    }
    RatMat u = exp_nilpotent(Rat(fact) * to_rat(n));
    IntMat ui;
    if (!to_int(u, &ui))
      return {false, "fractional exponential at sample " + std::to_string(k)};
    if (det(ui) != 1)
      return {false, "exponential determinant at sample " + std::to_string(k)};
  }
  std::vector<NilpotentAlgebra> algebras;
  for (int N = 2; N <= 4; ++N) {
    std::vector<RatMat> gens;
    for (int i = 0; i < N; ++i)
      for (int j = i + 1; j < N; ++j) {
        RatMat e(N, N);
        e(i, j) = 1;
        gens.push_back(e);
      }
    algebras.push_back(nilpotent_algebra(lie_span(N, gens, true)));
  }
  for (int k = 0; k < 200; ++k) {
    int N = 2 + k % 3;
    const NilpotentAlgebra& na = algebras[N - 2];
    long fact = 1;
    for (int t = 2; t <= N; ++t) fact *= t;
    RatMat h = exp_nilpotent(random_nilpotent_rat(rng, N, 6, 3));
    UnipotentReduction ur = unipotent_reduce(h, na);
    std::string tag = " at sample " + std::to_string(k);
    if (det(ur.gamma) != 1) return {false, "gamma not unimodular" + tag};
    if (ur.reduced != h * to_rat(ur.gamma))
      return {false, "reduced is not h gamma" + tag};
    for (const Rat& cc : ur.coords) {
      Rat two = Rat(2) * cc;
      if (two < Rat(-fact) || two >= Rat(fact))
        return {false, "coordinate outside the window" + tag};
    }
    UnipotentReduction again = unipotent_reduce(ur.reduced, na);
    if (again.gamma != IntMat::identity(N) || again.coords != ur.coords ||
        again.reduced != ur.reduced)
      return {false, "reduction is not idempotent" + tag};
  }
  return {true, "500 roundtrips, 500 integral exponentials, 200 idempotent "
                "reductions with windowed coordinates"};
}

// ---------------------------------------------------------------------------
// criterion 9: the eigenvalue product vanishes exactly on nilpotents and is
// at least one otherwise

Outcome criterion9() {
  Rng rng(109);
  int nilpotents = 0;
  for (int k = 0; k < 1000; ++k) {
    int N = 2 + k % 3;
    IntMat w(N, N);
    if (k % 3 == 0) {
      IntMat gamma = random_conjugator(N, 2, rng);
      w = gamma * random_strict_upper(rng, N, 4) * inverse_unimodular(gamma);
    } else {
      w = random_traceless(rng, N, 6);
    }
    IntMat p = IntMat::identity(N);
    for (int t = 0; t < N; ++t) p = p * w;
    bool nil = p.is_zero();
    Rat sigma = eigenvalue_product(to_rat(w));
    std::string tag = " at sample " + std::to_string(k);
    if ((sigma == 0) != nil) return {false, "dichotomy violated" + tag};
    if (nil) {
      ++nilpotents;
    } else {
      if (den(sigma) != 1) return {false, "non-integral product" + tag};
      if (abs(sigma) < 1) return {false, "product below one" + tag};
    }
  }
  return {true, "1000 elements, " + std::to_string(nilpotents) +
                    " nilpotent, product integral and at least one otherwise"};
}

// ---------------------------------------------------------------------------
// criterion 10: repeated runs with the same seeds emit identical bytes

Outcome criterion10() {
  Json bc;
  bc["schema"] = kSchema;
  bc["kind"] = "bench_config";
  bc["seeds"] = Json::array({"sl2_semidirect", "heisenberg_sl3"});
  bc["entry_bounds"] = Json::array({2, 3});
  bc["samples"] = 3;
  bc["rng_seed"] = 17;

  RatMat d{{Rat(4), Rat(0)}, {Rat(0), Rat(1, 4)}};
  Json solve;
  solve["schema"] = kSchema;
  solve["kind"] = "siegel_solve_input";
  solve["A"] = Json::parse(R"([["1","2"]])");
  solve["b"] = Json::parse(R"(["3"])");
  Json small;
  small["schema"] = kSchema;
  small["kind"] = "small_basis_input";
  small["ambient"] = 2;
  small["lattice"] = Json::parse(R"([["1","0"],["0","1"]])");
  small["vectors"] = Json::parse(R"([["1","0"],["1","2"]])");
  Json ured;
  ured["schema"] = kSchema;
  ured["kind"] = "unipotent_reduce_input";
  ured["h"] = Json::parse(R"([["1","3","59/6"],["0","1","5"],["0","0","1"]])");
  Json alg;
  alg["schema"] = kSchema;
  alg["kind"] = "lie_algebra";
  alg["N"] = 3;
  alg["basis"] = Json::parse(R"([
    [["0","1","0"],["0","0","0"],["0","0","0"]],
    [["0","0","0"],["0","0","1"],["0","0","0"]],
    [["0","0","1"],["0","0","0"],["0","0","0"]]])");
  ured["algebra"] = alg;

  struct Cmd {
    std::string name;
    std::string input;
    std::string S = "inf";
    std::string format = "json";
  };
  const std::vector<Cmd> battery = {
      {"radical", fixture_json("sl2_plus_abelian_sl4")},
      {"levi", fixture_json("sl2_semidirect")},
      {"standardize", fixture_json("heisenberg_sl3")},
      {"height-subspace", fixture_json("nilradical_borel_sl4")},
      {"height", matrix_json(d), "inf,2"},
      {"height-adjoint", matrix_json(d)},
      {"reduce", matrix_json(d)},
      {"inj-radius", matrix_json(d)},
      {"siegel-kernel", matrix_json(to_rat(IntMat{{1, 2, 3}}))},
      {"siegel-solve", solve.dump()},
      {"small-basis", small.dump()},
      {"unipotent-reduce", ured.dump()},
      {"bench-exponents", bc.dump()},
      {"bench-exponents", bc.dump(), "inf", "csv"},
  };
  for (const Cmd& cmd : battery) {
    CommandOptions opt;
    opt.S = cmd.S;
    opt.format = cmd.format;
    CommandResult a = run_command(cmd.name, cmd.input, opt);
    CommandResult b = run_command(cmd.name, cmd.input, opt);
    if (a.exit_code != 0 || b.exit_code != 0)
      return {false, cmd.name + " (" + cmd.format + ") exited nonzero"};
    if (a.output != b.output)
      return {false, cmd.name + " (" + cmd.format + ") output differs"};
  }
  return {true, std::to_string(battery.size()) +
                    " command outputs byte-identical across repeated runs"};
}

void run_criterion(int idx, const char* name, Outcome (*fn)(), int* failures) {
  auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = fn();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  std::printf("criterion %d (%s): %s - %s, %.1fs\n", idx, name,
              o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++*failures;
}

}  // namespace

int main() {
  int failures = 0;
  run_criterion(1, "siegel kernel bound", criterion1, &failures);
  run_criterion(2, "basis extraction", criterion2, &failures);
  run_criterion(3, "levi validity", criterion3, &failures);
  run_criterion(4, "radical oracle", criterion4, &failures);
  run_criterion(5, "siegel reduction", criterion5, &failures);
  run_criterion(6, "height comparison", criterion6, &failures);
  run_criterion(7, "product formula bridge", criterion7, &failures);
  run_criterion(8, "unipotent calculus", criterion8, &failures);
  run_criterion(9, "nilpotency dichotomy", criterion9, &failures);
  run_criterion(10, "determinism", criterion10, &failures);
  std::printf("acceptance: %d/10 criteria passed\n", 10 - failures);
  return failures;
}
