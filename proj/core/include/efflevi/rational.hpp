#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "efflevi/errors.hpp"

namespace efflevi {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

inline Int num(const Rat& x) { return x.get_num(); }
inline Int den(const Rat& x) { return x.get_den(); }

inline Rat rat(long n, long d = 1) {
  Rat r(n, d);
  r.canonicalize();
  return r;
}

inline Rat rat_of(const Int& n, const Int& d) {
  require_input(d != 0, "rational with zero denominator");
  Rat r(n, d);
  r.canonicalize();
  return r;
}

// floor(a / b) with sign convention of mathematical floor.
inline Int floor_div(const Int& a, const Int& b) {
  Int q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

inline Int floor_rat(const Rat& x) { return floor_div(num(x), den(x)); }

inline Int ceil_rat(const Rat& x) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), num(x).get_mpz_t(), den(x).get_mpz_t());
  return q;
}

// Nearest integer to x; a tie x = k + 1/2 rounds up so that x - round(x)
// always lies in [-1/2, 1/2).
inline Int round_half_down_remainder(const Rat& x) {
  return floor_rat(x + Rat(1, 2));
}

// Largest t >= 0 with t^2 <= n. Requires n >= 0.
inline Int isqrt_floor(const Int& n) {
  ensure(n >= 0, "isqrt of negative value");
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

// Largest integer t >= 0 with t^2 <= x, for rational x >= 0.
inline Int isqrt_floor_rat(const Rat& x) {
  ensure(x >= 0, "isqrt of negative rational");
  return isqrt_floor(floor_div(num(x), den(x)));
}

// p-adic valuation of a nonzero integer.
inline long valuation(const Int& a, const Int& p) {
  ensure(a != 0, "valuation of zero");
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

// p-adic valuation of a nonzero rational.
inline long valuation(const Rat& x, const Int& p) {
  return valuation(num(x), p) - valuation(den(x), p);
}

inline Int gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int lcm(const Int& a, const Int& b) {
  Int l;
  mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return l;
}

// gcd of all entries, non-negative; 0 for the zero vector.
inline Int content(const IntVec& v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  return g;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Rat pow_rat(const Rat& base, unsigned long e) {
  return Rat(pow_int(num(base), e), pow_int(den(base), e));
}

// Exact k-th root of x >= 0 if it exists.
inline bool exact_root(const Rat& x, unsigned long k, Rat* out) {
  ensure(x >= 0 && k >= 1, "exact_root domain");
  Int rn, rd;
  int okn = mpz_root(rn.get_mpz_t(), num(x).get_mpz_t(), k);
  int okd = mpz_root(rd.get_mpz_t(), den(x).get_mpz_t(), k);
  if (!okn || !okd) return false;
  if (out) *out = rat_of(rn, rd);
  return true;
}

inline Int abs(const Int& x) { return ::abs(x); }
inline Rat abs(const Rat& x) { return ::abs(x); }

// Canonical string form: "p" for integers, "p/q" otherwise (GMP lowest terms).
inline std::string to_string(const Rat& x) { return x.get_str(); }
inline std::string to_string(const Int& x) { return x.get_str(); }

// Parses "p" or "p/q". Throws invalid_input on malformed text.
inline Rat rat_from_string(const std::string& s) {
  require_input(!s.empty(), "empty rational literal");
  Rat r;
  if (r.set_str(s, 10) != 0) throw invalid_input("malformed rational: " + s);
  require_input(den(r) != 0, "rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

}  // namespace efflevi
