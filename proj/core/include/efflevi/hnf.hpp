#pragma once

#include <vector>

#include "efflevi/matrix.hpp"

namespace efflevi {

// Row-style Hermite normal form H = U * A with U unimodular. H is in row
// echelon form, each pivot is positive and strictly dominates its column:
// entries above a pivot are reduced into [0, pivot).
struct HnfResult {
  IntMat H;
  IntMat U;
  std::vector<int> pivot_cols;
  int rank() const { return static_cast<int>(pivot_cols.size()); }
};

HnfResult hermite_normal_form(const IntMat& A);

// Smith normal form D = U * A * V with U, V unimodular, D diagonal with
// non-negative elementary divisors d_1 | d_2 | ... | d_r.
struct SnfResult {
  IntMat D;
  IntMat U;
  IntMat V;
  std::vector<Int> divisors() const;
};

SnfResult smith_normal_form(const IntMat& A);

// Z-basis of ker(A) intersected with Z^N (N = A.cols). The result is
// saturated: it extends to a basis of Z^N. Empty when A has full column rank.
std::vector<IntVec> kernel_saturated_basis(const IntMat& A);

// Z-basis of span_Q(rows) intersected with Z^ambient.
std::vector<IntVec> saturate_span(const std::vector<IntVec>& rows, int ambient);

// True if the given independent vectors form a Z-basis of their saturation.
bool is_saturated(const std::vector<IntVec>& basis, int ambient);

// Integer coordinates of v in the given independent basis, if v lies in the
// Z-span. Returns false if v is outside the Q-span or has fractional
// coordinates.
bool integer_coordinates(const std::vector<IntVec>& basis, int ambient,
                         const IntVec& v, IntVec* coords);

// Rational coordinates of v in the Q-span of basis; false if outside.
bool rational_coordinates(const std::vector<RatVec>& basis, int ambient,
                          const RatVec& v, RatVec* coords);

}  // namespace efflevi
