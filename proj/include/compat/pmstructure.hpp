#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "compat/mstructure.hpp"
#include "compat/pm_algebra.hpp"

namespace compat {

// Matrices for the generators of a PMPresentation on V_1 + ... + V_m.
// a[x][y][i] is the image of A[xy][i] (dims[x] x dims[y]), b[x][y][i] that of
// B[xy][i], c[x] that of C_x.
struct PMRepresentation {
  std::vector<std::size_t> dims;
  std::vector<std::vector<std::vector<Matrix>>> a, b;
  std::vector<Matrix> c;

  std::size_t blocks() const { return dims.size(); }
};

// Mat_{n_1} + ... + Mat_{n_m}; entry (r, s) of block x sits at offset(x) + r * n_x + s.
// The offsets end with the total dimension.
std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& dims);
StructureConstants block_matrix_algebra(const std::vector<std::size_t>& dims);

// Generator relations, the C actions (stored ones, or those forced by
// centrality), non-degeneracy, and associativity plus compatibility of the
// resulting second product.
IdentityReport pm_validate_representation(const PMPresentation& pres, const PMRepresentation& rep);

// R_yx(x) = a[y][x][i] x b[x][y][i] between blocks, plus c_x x on the diagonal.
LinearOperator pm_r_operator(const PMRepresentation& rep);
// Blockwise second product. For x, y in one block X the terms
// -a[v][X][i] (x y) b[X][v][i] land in every other block v. Not checked.
StructureConstants pm_second_product(const PMRepresentation& rep);

// Blocks with one A and one B generator between distinct blocks and none inside:
//   A_xy A_yz = A_xz (x != z),  A_xy A_yx = e_x,  the same for the B_xy,
//   B_xy A_yz = (u_y - u_z)/(u_x - u_z) A_xz + (u_y - u_x)/(u_z - u_x) B_xz,
//   B_xy A_yx = e_x + (u_y - u_x) C_x,
// pairing (A_xy, B_yx) = (u_x - u_y)/t_y and K_x = t_x C_x + sum over y != x of
// t_y/(u_x - u_y) (A_xy B_yx - e_x). Stored with B rescaled to the dual basis
// and C replaced by the coefficient of K. Throws on coincident u or zero t.
PMPresentation rational_pmstructure(std::span<const Scalar> u, std::span<const Scalar> t);
// The one-dimensional representation A -> 1, B_xy -> u_y/u_x, C_x -> 1/u_x.
PMRepresentation rational_pm_representation(std::span<const Scalar> u, std::span<const Scalar> t);

// Cyclic family with generators A^i_xy, B^i_xy (i mod k, i != 0 when x = y):
//   A^i_xy A^j_yz = A^{i+j}_xz,  B^i_xy B^j_yz = B^{i+j}_xz,  A^0_xx = B^0_xx = e_x,
// pairing (B^i_xy, A^{-i}_yx) = (eps^i lambda_x - lambda_y)/t_x with eps a
// primitive k-th root of unity. Generator A[xy][index(i)] is A^i_xy and its dual
// partner B[yx][index(i)] is a multiple of B^{-i}_yx.
struct CyclicPMData {
  std::size_t k = 1;
  Vector lambda;
  Vector weights;  // the t_x
  Field field = Field::rationals();  // cyclotomic of order k unless floating

  std::size_t blocks() const { return lambda.size(); }
  Scalar eps() const;
  // Position of exponent i among the generators of block (x, y).
  std::size_t index(std::size_t x, std::size_t y, long i) const;
};
// Throws when lambda_x^k = lambda_y^k for some x != y, some lambda or t vanishes.
PMPresentation cyclic_pmstructure(const CyclicPMData& data);
// A^i -> a^i, B^i_xy -> (eps^i d - lambda_y)(d - lambda_x)^{-1} a^i, C_x -> (d - lambda_x)^{-1}
// on C^k, a the cyclic shift and d = s diag(1, eps, ..., eps^{k-1}), so a d = eps d a.
// Throws if some d - lambda_x is singular.
PMRepresentation cyclic_pm_representation(const CyclicPMData& data, const Scalar& s);
// The R operator of that representation written directly in the weights; it is
// linear in them and defined for vanishing weights as well.
LinearOperator cyclic_pm_r_operator(const CyclicPMData& data, const Scalar& s);

PMPresentation pm_direct_sum(const PMPresentation& x, const PMPresentation& y);
// Swaps the roles of the two subalgebras and reverses their products.
PMPresentation pm_opposite(const PMPresentation& pres);

// Dimensions of the blocks A_xy, B_xy and L_xy of the underlying space.
struct BlockDimensions {
  std::vector<std::vector<std::size_t>> a, b, l;
};
BlockDimensions pm_block_dimensions(const PMPresentation& pres);

}  // namespace compat
