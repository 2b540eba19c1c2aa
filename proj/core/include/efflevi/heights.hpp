#pragma once

#include <vector>

#include "efflevi/lie.hpp"

namespace efflevi {

// A place of Q: the archimedean one or a finite prime.
struct Place {
  bool infinite = true;
  Int p = 0;

  bool operator==(const Place&) const = default;
};

inline Place inf_place() { return Place{true, Int(0)}; }
inline Place finite_place(Int p) { return Place{false, std::move(p)}; }

// Element of SL_N over the S-adic points: one determinant-one rational matrix
// per place. The archimedean place must be present.
struct SElement {
  std::vector<Place> places;
  std::vector<RatMat> components;

  int dim() const { return components.empty() ? 0 : components[0].rows; }
};

// Throws invalid_input unless places are distinct, the archimedean place is
// present, finite places are prime, and every component is square of the same
// size with determinant exactly 1.
void validate(const SElement& g);

// Absolute value at a place: usual one at infinity, |x|_p = p^{-v_p(x)} at a
// finite place, 0 at 0.
Rat place_abs(const Rat& x, const Place& v);

// Sup of entry absolute values at the place.
Rat place_norm(const RatVec& w, const Place& v);
Rat place_norm(const RatMat& w, const Place& v);

// Content c_S: product over the places of the per-place norms. Inputs are
// the values of w at each place, aligned with S. Throws on a zero component.
Rat c_S(const std::vector<Place>& S, const std::vector<RatVec>& w);
Rat c_S(const std::vector<Place>& S, const std::vector<RatMat>& w);

struct HeightResult {
  Rat value;       // the height, 1 / min_c
  Rat min_c;       // minimal content over primitive vectors
  IntVec witness;  // primitive minimizer, first nonzero entry positive
  long nodes = 0;
};

// Height of an S-element: the reciprocal of the minimal c_S(g w) over
// nonzero w in Z_S^N, attained on primitive integer vectors and found by
// certified enumeration of the archimedean component, stratified over
// p-adic valuation classes at the finite places.
HeightResult height_S(const SElement& g, long node_budget = kDefaultNodeBudget);

// Adjoint height: same contract under X -> g X g^-1 acting on L cap sl_N(Z)
// in its saturated basis, with matrix sup norms at every place. L defaults
// to all of sl_N; the witness holds coordinates in the basis of L.
HeightResult height_adjoint(const SElement& g, const LieSubalgebra* L = nullptr,
                            long node_budget = kDefaultNodeBudget);

// Siegel reduction of the column lattice: g gamma = k a u with orthogonal k,
// diagonal a (squared entries are the Gram-Schmidt norms in the profile) and
// size-reduced u.
struct SiegelReduction {
  IntMat gamma;       // determinant 1
  RatMat reduced;     // g gamma
  GramProfile profile;
  Rat a_sup_squared;  // max_i max(a_i^2, a_i^-2)
};

SiegelReduction siegel_reduce(const RatMat& g, const Rat& delta = Rat(1));

// Exact representation of base_sq^(1/(2 root)), compared by cross-powering.
struct PowerBound {
  Rat base_sq;
  int root = 1;

  bool leq(const Rat& x) const;  // value <= x
  bool geq(const Rat& x) const;  // value >= x
  bool exact_value(Rat* out) const;
  double approx() const;
};

// Exact element a + b sqrt(3) of Q(sqrt 3).
struct QuadRt3 {
  Rat a;
  Rat b;

  double approx() const;
};

QuadRt3 operator+(const QuadRt3& x, const QuadRt3& y);
QuadRt3 operator*(const QuadRt3& x, const QuadRt3& y);

// (1/2)(((2/sqrt3)^N - 1)/((2/sqrt3) - 1) + 1), the operator norm bound for
// a u a^-1 over all Siegel-reduced pairs.
QuadRt3 unipotent_conjugation_constant(int N);

// Two-sided anchors |a|^{1/(N-1)} and |a| for the height of a reduced
// element, with the conjugation constant that scales them.
struct HtBounds {
  PowerBound lower;
  PowerBound upper;
  QuadRt3 scale;
  Rat a_sup_squared;
};

HtBounds ht_bounds_from_profile(const SiegelReduction& red);

// Explicit constant c(N) in the injectivity radius bound eta = c(N) |a|^-2;
// a sufficient rational chain, not an optimal one.
Rat injectivity_constant(int N);

struct InjectivityRadius {
  Rat eta;
  Rat eta_sq;
  Rat a_sup_squared;
  Rat c_n;
};

InjectivityRadius injectivity_radius_lower(const RatMat& g);

}  // namespace efflevi
