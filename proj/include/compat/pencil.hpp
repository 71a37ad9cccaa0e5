#pragma once

#include <cstddef>
#include <span>

#include "compat/algebra.hpp"

namespace compat {

// d x d matrix acting on coordinate columns of an algebra.
using LinearOperator = Matrix;

struct CompatibilityReport {
  Residual star;
  Residual circle;
  Residual mixed;
  bool compatible() const { return star.vanishes && circle.vanishes && mixed.vanishes; }
};

// Decides associativity of circle + s*star for every s from the three
// coefficient tensors of the expansion in s.
CompatibilityReport check_compatibility(const Pencil& p);

// X o Y = R(X)*Y + X*R(Y) - R(X*Y). The result is not checked.
StructureConstants deform_by_R(const StructureConstants& star, const LinearOperator& r);

struct Deformation {
  StructureConstants circle;
  CompatibilityReport report;
};
Deformation verified_deform(const StructureConstants& star, const LinearOperator& r);

// R(R(X)*Y + X*R(Y)) - R(X)*R(Y) - R^2(X*Y) - S(X)*Y - X*S(Y) + S(X*Y) over
// basis pairs. Pass a zero S for the single-operator equation.
Residual yang_baxter_residual(const LinearOperator& r, const LinearOperator& s,
                              const StructureConstants& star);
Residual yang_baxter_residual(const LinearOperator& r, const StructureConstants& star);

LinearOperator left_multiplication(const StructureConstants& star, std::span<const Scalar> a);
LinearOperator right_multiplication(const StructureConstants& star, std::span<const Scalar> a);
// R + ad(a) with ad(a)(v) = a*v - v*a; the deformed product does not change.
LinearOperator equivalent_shift(const LinearOperator& r, std::span<const Scalar> a,
                                const StructureConstants& star);

// Diagonal algebra e_i * e_j = delta_ij e_i with the compatible product
// e_i o e_j = r_ij e_j + r_ji e_i - delta_ij sum_k r_ik e_k, where
// r_ij = q_i p_j / (p_i - p_j) off the diagonal and the diagonal is fixed by
// sum_k r_ki = q0. Throws on coincident p.
Pencil diagonal_pencil(std::span<const Scalar> p, std::span<const Scalar> q, const Scalar& q0);
// The operator R with R(e_i) = sum_j r_ij e_j for the same data.
LinearOperator diagonal_pencil_operator(std::span<const Scalar> p, std::span<const Scalar> q, const Scalar& q0);

// Product on V (x) F_m, F_m the polynomials of degree < m, for a compatible pair on V and q of degree m with
// nonzero leading coefficient. Basis vector e_k (x) t^a sits at index a*d + k.
// The generating function of x_a y_b is
//   [q(u) w(v) - q(v) w(u)] / (u - v),  w(u) = (x*y)(u) + u (x o y)(u),
// with z(u) = sum_a (z (x) t^a) u^a; the quotient has degree m - 1 in each variable.
StructureConstants polynomial_extension(const Pencil& p, std::span<const Scalar> q);

// The m+1 products for q = u^j, j = 0..m, are associative and pairwise compatible.
bool extension_family_compatible(const Pencil& p, std::size_t m);

// For q = prod (u - b_i) the extension splits into m mutually annihilating
// subalgebras, the i-th isomorphic to x*y + b_i x o y. Throws on repeated roots.
bool extension_decompose_check(const Pencil& p, std::span<const Scalar> roots);

}  // namespace compat
