#pragma once

#include <optional>
#include <string>
#include <vector>

#include "efflevi/matrix.hpp"
#include "efflevi/siegel.hpp"

namespace efflevi {

// Commutator x y - y x.
IntMat bracket(const IntMat& x, const IntMat& y);
RatMat bracket(const RatMat& x, const RatMat& y);

// Dimension of sl_N.
inline int sl_dim(int N) { return N * N - 1; }

// Coordinates in the canonical basis of sl_N(Z): the off-diagonal units E_ij
// in row-major order followed by E_ii - E_{i+1,i+1} for i < N-1. Integer
// matrices correspond exactly to integer coordinate vectors.
RatVec sl_coords(const RatMat& x);
RatMat sl_from_coords(int N, const RatVec& coords);
IntVec sl_coords_int(const IntMat& x);
IntMat sl_from_coords_int(int N, const IntVec& coords);

// A Q-subalgebra of sl_N stored through the Z-basis of its intersection with
// sl_N(Z). The stored basis is always saturated.
struct LieSubalgebra {
  int N = 0;
  std::vector<IntMat> basis;
  std::vector<IntVec> coords;  // basis in canonical sl_N(Z) coordinates

  int dim() const { return static_cast<int>(basis.size()); }
  bool contains(const RatMat& x) const;
  // Rational coordinates of x in this basis; throws if x is outside.
  RatVec coordinates(const RatMat& x) const;
  bool same_span(const LieSubalgebra& other) const;
};

// Answers repeated coordinate queries against a fixed independent basis.
// Precomputes the inverse on a set of pivot columns once; each query is a
// small multiplication plus a full verification against the basis.
class CoordinateSolver {
 public:
  explicit CoordinateSolver(const LieSubalgebra& g);
  CoordinateSolver(const std::vector<IntVec>& basis, int ambient);

  // Rational coordinates of x; false when x is outside the span.
  bool solve(const RatVec& x, RatVec* coords) const;
  // Integer coordinates of an integer vector; false when outside the span or
  // fractional.
  bool solve_int(const IntVec& x, IntVec* coords) const;

 private:
  int ambient_ = 0;
  std::vector<int> piv_;
  RatMat cinv_;
  std::vector<RatVec> basis_;
};

// Builds the subalgebra spanned by gens: saturates the span inside sl_N(Z)
// and, when require_closed, verifies closure under the bracket.
LieSubalgebra lie_span(int N, const std::vector<RatMat>& gens,
                       bool require_closed = true);

// Subalgebra with the given coordinate vectors (w.r.t. the canonical basis)
// as Q-span; the stored basis is the saturation.
LieSubalgebra lie_from_coord_span(int N, const std::vector<IntVec>& coord_vecs,
                                  bool require_closed = true);

bool is_bracket_closed(const LieSubalgebra& g);

// Structure constants: [u_i, u_j] = sum_k alpha(i,j)[k] u_k, integral because
// the basis is a saturated Z-basis.
std::vector<std::vector<IntVec>> structure_constants(const LieSubalgebra& g);

// Killing form k(i, j) = trace(ad u_i . ad u_j) computed on g itself.
IntMat killing_form(const LieSubalgebra& g);

// Derived subalgebra [g, g].
LieSubalgebra derived_subalgebra(const LieSubalgebra& g);

struct DerivedSeries {
  std::vector<int> dims;  // dims of g, [g,g], ... until stable
  bool solvable = false;
  int derived_length = 0;  // meaningful only when solvable; 0 iff g = 0
};

DerivedSeries derived_series(const LieSubalgebra& g);

// Lower central series g, [g,g], [g,[g,g]], ... until stable.
std::vector<LieSubalgebra> lower_central_series(const LieSubalgebra& g);

// Maximal solvable ideal, via the Killing-orthogonal complement of [g, g].
// Postconditions (solvable ideal, nondegenerate quotient Killing form) are
// checked.
LieSubalgebra radical(const LieSubalgebra& g);

// Smallest ideal of g containing the given coordinate vectors.
LieSubalgebra ideal_closure(const LieSubalgebra& g,
                            const std::vector<IntVec>& seeds);

// Height of the subspace spanned by g: the sup norm of the primitive wedge
// coordinate vector of a Z-basis of g in the canonical wedge basis.
struct SubspaceHeight {
  Int value;
  IntVec wedge;  // primitive Plucker coordinates, C(N^2-1, dim) entries
  int dim = 0;
};

SubspaceHeight height_subspace(const LieSubalgebra& g);

// Normalizer {x in sl_N : [x, W] subset of W} of the subspace spanned by W.
LieSubalgebra normalizer_in_slN(const LieSubalgebra& W);

// Characteristic polynomial coefficients c_0..c_n of det(tI - w), monic.
std::vector<Rat> char_poly(const RatMat& w);

// Product of the nonzero eigenvalues; 0 when w is nilpotent. Rational by
// Galois invariance, and of absolute value >= 1 for integral w.
Rat eigenvalue_product(const RatMat& w);

}  // namespace efflevi
