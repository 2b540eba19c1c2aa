#pragma once

#include <functional>
#include <vector>

#include "efflevi/matrix.hpp"

namespace efflevi {

inline constexpr long kDefaultNodeBudget = 10'000'000;

// Lattice given by independent integer vectors in Z^ambient.
struct IntegerLattice {
  int ambient = 0;
  std::vector<IntVec> basis;

  IntegerLattice() = default;
  IntegerLattice(int amb, std::vector<IntVec> b);
  int rank() const { return static_cast<int>(basis.size()); }
};

// Exact Gram-Schmidt profile of an ordered basis: b2[i] = |b_i*|^2 and
// mu(i, j) for i < j is the coefficient of b_j along b_i*.
struct GramProfile {
  RatVec b2;
  RatMat mu;
};

GramProfile gram_profile(const std::vector<RatVec>& basis);

// Exact LLL reduction with delta in (1/4, 1]. delta = 1 is allowed and
// terminates: the integer-scaled Gram-Schmidt potential strictly decreases on
// every swap. new_basis[j] = sum_i U(i, j) * old_basis[i].
struct LllResult {
  std::vector<RatVec> basis;
  IntMat U;
};

LllResult lll_reduce(const std::vector<RatVec>& basis, const Rat& delta);

// Enumerates every integer vector x != 0 with Q(x) <= radius2, where Q is the
// positive definite form with the given exact Gram matrix. The callback may
// return a smaller radius to shrink the search. Each point visited in the
// search tree costs one node; exceeding node_budget throws resource_limit.
void enumerate_quadratic(const RatMat& gram, const Rat& radius2,
                         const std::function<Rat(const IntVec&, const Rat&)>& cb,
                         long node_budget, long* nodes_used);

// Certified shortest nonzero vector of {G * v : v in L} in the sup norm.
// G must be square and nonsingular. Exhaustiveness comes from enumerating in
// the Euclidean form: every x with |x|_sup <= V has |x|_2^2 <= dim * V^2.
struct SupSvpResult {
  IntVec coeffs;  // coordinates in L.basis
  IntVec vec;     // the lattice vector in Z^ambient
  Rat value;      // |G * vec|_sup
  long nodes = 0;
};

SupSvpResult shortest_vector_sup(const IntegerLattice& L, const RatMat& G,
                                 long node_budget = kDefaultNodeBudget);

// Sign convention for witness vectors: first nonzero coordinate positive.
void normalize_sign(IntVec& v);

// Lexicographic comparison used for deterministic witness tie-breaks.
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace efflevi
