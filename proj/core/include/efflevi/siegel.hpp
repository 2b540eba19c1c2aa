#pragma once

#include <vector>

#include "efflevi/hnf.hpp"
#include "efflevi/lattice.hpp"

namespace efflevi {

// Basis of the rational kernel of A (M x N, full row rank, M < N) by integer
// vectors whose entries x satisfy x^2 <= det(A A^T) exactly. The saturated
// kernel basis is LLL-reduced first; if that misses the bound, exhaustive
// enumeration below the bound takes over (such a spanning set always exists).
struct SiegelKernelResult {
  std::vector<IntVec> basis;
  Int det_bound;  // det(A A^T)
  bool enumeration_used = false;
  long nodes = 0;
};

SiegelKernelResult siegel_kernel_basis(const IntMat& A,
                                       long node_budget = kDefaultNodeBudget);

// Particular solution of A x = b over Q as x = y / d with y integral, or an
// infeasibility certificate z with z A = 0 and z . b != 0.
struct SiegelSolveResult {
  bool feasible = false;
  IntVec y;
  Int d = 1;
  Int achieved = 0;  // max(|y_i|, |d|)
  IntVec certificate;
};

SiegelSolveResult siegel_inhomogeneous(const IntMat& A, const IntVec& b);

// Replaces a generating family u_1..u_k of VZ (as a Q-space) by a Z-basis
// v_1..v_k of VZ such that span_Q(v_1..v_i) = span_Q(u_1..u_i) for every i
// and sup|v_i| <= sum_{j<=i} sup|u_j| exactly. The v_i come from the row
// Hermite form of the coordinate matrix of the u_j.
std::vector<IntVec> extract_small_basis(const IntegerLattice& VZ,
                                        const std::vector<IntVec>& u);

}  // namespace efflevi
