#pragma once

#include <vector>

#include "tropos/matrix.hpp"

namespace tropos {

using BoolMatrix = Matrix<char>;

// true (1) where the entry is finite.
BoolMatrix support_pattern(const TropMatrix& a);

// Each nonempty row of the support is one contiguous run, and the first and
// last positions of the runs are nondecreasing down the rows. Empty rows are
// skipped when comparing neighbours.
bool is_double_echelon(const TropMatrix& a);

// A = u·1ᵀ + 1·vᵀ + Σ λ_{kl} L^{(k,l)}, where L^{(k,l)} is the 0/1 matrix
// with ones on rows ≥ k and columns ≥ l. lambda(k-1, l-1) stores λ_{kl} for
// 1-based k, l ≥ 2, so lambda is (n-1)x(m-1).
struct StaircaseDecomposition {
  std::vector<Rational> u;
  std::vector<Rational> v;
  Matrix<Rational> lambda;
};

// Pins u_i = A_{i,1} and v_j = A_{1,j} − A_{1,1}; λ is then unique.
// Throws InfiniteEntry on −∞ entries and NotMonge if some λ < 0.
StaircaseDecomposition staircase_decompose(const TropMatrix& a);

// Throws NegativeCoefficient if some λ < 0, DimensionError on a shape mismatch.
TropMatrix staircase_reconstruct(const StaircaseDecomposition& d);

}  // namespace tropos
