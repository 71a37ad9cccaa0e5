#pragma once

#include <cstddef>

#include "compat/algebra.hpp"

namespace compat {

// Linear bracket {f_a, f_b} = gamma(a, b, c) f_c on D coordinates.
struct LinearPoissonBracket {
  StructureConstants gamma;
  std::size_t dim() const { return gamma.dim(); }
};

inline constexpr std::size_t kMaxBracketDim = 40;

// Coordinates f_{i,l,m} (i < N, l, m < n) at index (i * n + l) * n + m:
//   {f_{i,l1,m1}, f_{j,l2,m2}} = [m1 = l2] p(i,j,k) f_{k,l1,m2} - [m2 = l1] p(j,i,k) f_{k,l2,m1}
// with p the constants of `sc`. Associativity of sc is assumed, not checked.
LinearPoissonBracket build_bracket(const StructureConstants& sc, std::size_t n);

// Jacobiator over all coordinate triples; witness (a, b, c).
// Throws std::invalid_argument above kMaxBracketDim coordinates.
Residual jacobi_residual(const LinearPoissonBracket& b);
// Cross terms of the Jacobiator of b1 + s b2, the part linear in s.
Residual poisson_compatibility(const LinearPoissonBracket& b1, const LinearPoissonBracket& b2);

}  // namespace compat
