#pragma once

#include <vector>

#include "efflevi/lie.hpp"

namespace efflevi {

// Nilpotent subalgebra of sl_N together with a Mal'cev basis adapted to its
// lower central series: shallow layers first, each suffix a Z-basis of the
// corresponding series term.
struct NilpotentAlgebra {
  LieSubalgebra underlying;
  int nilpotency_class = 0;
  std::vector<IntVec> malcev;  // adapted Z-basis in canonical coordinates
  std::vector<int> layer;      // 1-based series layer per Mal'cev vector
};

// Builds the adapted data. Throws invalid_input unless every basis matrix is
// nilpotent as a matrix and the lower central series reaches zero; a spanning
// set of nilpotent matrices alone does not make the algebra nilpotent, so the
// series check is the one that decides.
NilpotentAlgebra nilpotent_algebra(const LieSubalgebra& r);

// Truncated exponential sum_{k<N} x^k / k!. Throws invalid_input unless
// x^N = 0.
RatMat exp_nilpotent(const RatMat& x);

// Truncated logarithm sum_{k<N} (-1)^{k+1} (u - I)^k / k. Throws
// invalid_input unless (u - I)^N = 0. Exact inverse of exp_nilpotent.
RatMat log_unipotent(const RatMat& u);

struct UnipotentReduction {
  IntMat gamma;    // product of exp(-k N! W) steps, unimodular
  RatMat reduced;  // h * gamma
  RatVec coords;   // Mal'cev coordinates of log(reduced), shallow first
  Rat achieved;    // sup norm of the reduced element
};

// Reduces the Mal'cev coordinates of h into [-N!/2, N!/2) layer by layer,
// multiplying on the right by exponentials of the N!-rescaled adapted basis
// so that gamma stays integral. Throws invalid_input when log(h) lies
// outside the algebra.
UnipotentReduction unipotent_reduce(const RatMat& h, const NilpotentAlgebra& r);

}  // namespace efflevi
