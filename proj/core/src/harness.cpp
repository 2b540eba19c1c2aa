#include "efflevi/harness.hpp"

#include <cmath>

#include "efflevi/fixtures.hpp"
#include "efflevi/heights.hpp"
#include "efflevi/levi.hpp"

namespace efflevi {

IntMat random_conjugator(int N, long B, Rng& rng) {
  require_input(N >= 1 && B >= 1, "conjugators need N >= 1 and B >= 1");
  IntMat g = IntMat::identity(N);
  if (N == 1) return g;
  int fails = 0;
  const int max_fails = 4 * N * N;
  while (fails < max_fails) {
    int i = static_cast<int>(rng.uniform(0, N - 1));
    int j = static_cast<int>(rng.uniform(0, N - 2));
    if (j >= i) ++j;
    long sign = rng.coin() ? 1 : -1;
    IntMat cand = g;
    bool ok = true;
    for (int r = 0; r < N; ++r) {
      cand(r, j) += sign * g(r, i);
      if (ok && abs(cand(r, j)) > B) ok = false;
    }
    if (ok) {
      g = cand;
      fails = 0;
    } else {
      ++fails;
    }
  }
  ensure(det(g) == 1, "conjugator must be unimodular");
  return g;
}

double log_int(const Int& x) {
  ensure(x > 0, "log of a nonpositive integer");
  long e = 0;
  double d = mpz_get_d_2exp(&e, x.get_mpz_t());
  return std::log(d) + static_cast<double>(e) * std::log(2.0);
}

double log_rat(const Rat& x) {
  ensure(x > 0, "log of a nonpositive rational");
  return log_int(num(x)) - log_int(den(x));
}

namespace {

SlopeFit fit_cell(const std::string& fixture_name, long B,
                  const std::vector<BenchRow>& rows, size_t begin, size_t end) {
  SlopeFit fit;
  fit.fixture = fixture_name;
  fit.B = B;
  fit.n = static_cast<int>(end - begin);
  std::vector<double> xs, ys;
  for (size_t i = begin; i < end; ++i) {
    xs.push_back(log_int(rows[i].T));
    ys.push_back(log_int(rows[i].ht_h));
  }
  int n = fit.n;
  double mx = 0, my = 0;
  for (int i = 0; i < n; ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0, sxy = 0;
  for (int i = 0; i < n; ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  if (n < 2 || sxx < 1e-9) {
    fit.degenerate = true;
    return fit;
  }
  fit.slope = sxy / sxx;
  if (n > 2) {
    double rss = 0;
    for (int i = 0; i < n; ++i) {
      double r = ys[i] - my - fit.slope * (xs[i] - mx);
      rss += r * r;
    }
    fit.slope_se = std::sqrt(rss / (n - 2) / sxx);
  }
  return fit;
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  require_input(!config.seeds.empty(), "bench needs at least one seed");
  require_input(!config.entry_bounds.empty(), "bench needs entry bounds");
  require_input(config.samples >= 1, "bench needs a positive sample count");
  for (long B : config.entry_bounds)
    require_input(B >= 1, "entry bounds must be positive");

  BenchReport rep;
  rep.config = config;
  Rng rng(config.rng_seed);
  for (const std::string& name : config.seeds) {
    Fixture fx = fixture(name);
    int N = fx.algebra.N;
    for (long B : config.entry_bounds) {
      size_t cell_begin = rep.rows.size();
      for (int k = 0; k < config.samples; ++k) {
        IntMat gamma = random_conjugator(N, B, rng);
        IntMat ginv = inverse_unimodular(gamma);
        auto conjugated = [&](const LieSubalgebra& a) {
          std::vector<IntVec> coords;
          for (const IntMat& b : a.basis)
            coords.push_back(sl_coords_int(gamma * b * ginv));
          return lie_from_coord_span(a.N, coords, false);
        };
        LieSubalgebra g2 = conjugated(fx.algebra);
        LieSubalgebra keep2;
        if (fx.has_keep) keep2 = conjugated(fx.keep);
        LeviResult lr = effective_levi(g2, fx.has_keep ? &keep2 : nullptr);

        BenchRow row;
        row.fixture = name;
        row.B = B;
        row.k = k;
        row.T = lr.ht_g;
        row.ht_h = lr.ht_h;
        row.ht_r = lr.ht_r;
        row.a_sq = siegel_reduce(to_rat(gamma)).a_sup_squared;
        SElement ge;
        ge.places = {inf_place()};
        ge.components = {to_rat(gamma)};
        row.ht = height_S(ge).value;
        row.depth = lr.depth;
        row.valid = levi_valid(g2, lr.h, fx.has_keep ? &keep2 : nullptr);
        rep.rows.push_back(std::move(row));
      }
      rep.slopes.push_back(
          fit_cell(name, B, rep.rows, cell_begin, rep.rows.size()));
    }
  }
  return rep;
}

}  // namespace efflevi
