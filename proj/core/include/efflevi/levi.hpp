#pragma once

#include <vector>

#include "efflevi/lie.hpp"

namespace efflevi {

// Result of the constructive Levi decomposition g = h + r. The radical basis
// comes from small kernel vectors of the Killing system, the Levi factor from
// iterated small solutions of the splitting systems; every intermediate basis
// is a saturated Z-basis of its intersection with sl_N(Z).
struct LeviResult {
  LieSubalgebra h;  // Levi subalgebra, [h, h] = h or h = 0
  LieSubalgebra r;  // radical of the input
  int depth = 0;    // number of splitting systems solved
  Int ht_g = 1;     // subspace heights of g, h, r
  Int ht_h = 1;
  Int ht_r = 1;
  std::vector<Int> solve_achieved;  // max(|y|, d) per splitting solve
};

// Computes a Levi subalgebra of g. When keep is given it must be a
// subalgebra of g with nondegenerate Killing form; the returned h then
// contains it. Throws invalid_input when keep violates these constraints and
// resource_limit when the enumeration budget runs out.
LeviResult effective_levi(const LieSubalgebra& g,
                          const LieSubalgebra* keep = nullptr,
                          long node_budget = kDefaultNodeBudget);

// Checks that h is a Levi subalgebra of g: closed under the bracket, with
// nondegenerate Killing form, complementary to the radical. When keep is
// given it must additionally be contained in h.
bool levi_valid(const LieSubalgebra& g, const LieSubalgebra& h,
                const LieSubalgebra* keep = nullptr);

// Unimodular change of basis moving a nilpotently acting radical into
// strictly upper block triangular form and the Levi factor into block
// triangular form.
struct FlagStandardization {
  IntMat delta;
  IntMat delta_inv;
  std::vector<int> flag_dims;    // dims of the proper flag steps, deepest last
  std::vector<int> block_sizes;  // diagonal block sizes, deepest first
  Int delta_size = 1;            // max entry of delta and delta_inv
};

// Builds the standardization from the chain V_{k+1} = r . V_k. Requires every
// element of r to act nilpotently on Q^N; otherwise throws invalid_input.
// The conjugated images delta r delta^-1 (strictly upper) and
// delta h delta^-1 (upper) are verified exactly.
FlagStandardization standardize_radical(const LieSubalgebra& h,
                                        const LieSubalgebra& r);

}  // namespace efflevi
