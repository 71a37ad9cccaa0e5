#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "compat/algebra.hpp"
#include "compat/pencil.hpp"
#include "compat/tensor.hpp"

namespace compat {

// R(x) = sum_i a_i x b^i + c x on Mat_n.
struct RPresentation {
  std::size_t n = 0;
  std::vector<Matrix> a;
  std::vector<Matrix> b;
  Matrix c;

  std::size_t length() const { return a.size(); }
};

// Structure tensors of a presentation closed under products:
//   a_i a_j = phi(i,j,k) a_k + mu(i,j),   b^i b^j = psi(i,j,k) b^k + lambda(i,j),
//   b^i a_j = psi(k,i,j) a_k + phi(j,k,i) b^k + t(i,j) + delta_ij c.
struct MTensors {
  std::size_t p = 0;
  Tensor3 phi, psi;
  Tensor2 mu, lambda, t;

  static MTensors zero(std::size_t p);
};

Matrix r_apply(const RPresentation& pres, const Matrix& x);
// Dense n^2 x n^2 operator in the row-major unit basis of Mat_n.
LinearOperator r_operator(const RPresentation& pres);
// x o y = a_i x b^i y + x a_i y b^i - a_i x y b^i + x c y
StructureConstants second_product(const RPresentation& pres);

struct IndependenceReport {
  bool independent = true;
  // Coefficients of a vanishing combination; the identity comes first when included.
  Vector witness;
};
IndependenceReport check_independence(const std::vector<Matrix>& mats, bool include_unity);

// Shortest presentation of R up to adding an inner derivation: the traceless
// parts of the Kronecker factors are rank-factorized and everything of the form
// x -> u x or x -> x u is folded into c.
RPresentation minimize_presentation(const LinearOperator& r, std::size_t n);

struct MExtraction {
  MTensors tensors;
  RPresentation presentation;  // the presentation the tensors refer to
  bool minimized = false;      // true if the input had to be shortened first
  Residual consistency;        // b^i c and c a_j relations
};
// Throws std::domain_error if the products leave the spans of {1, a} or {1, b},
// or if b^i a_j minus its span part is not a scalar.
MExtraction extract_m_tensors(const RPresentation& pres);

// The seven identity families the tensors of an associative second product obey.
IdentityReport check_tensor_identities(const MTensors& t);

// S(x) = mu(j,i) (b^i x b^j - psi(i,j,k) x b^k - lambda(i,j) x), the companion of
// R in the two-operator Yang-Baxter equation.
LinearOperator s_operator(const RPresentation& pres, const MTensors& t);

// a_i -> a_i + u_i, b^i -> b^i + v^i, c -> c - u_i b^i - v^i a_i - u_i v^i.
RPresentation shift_presentation(const RPresentation& pres, const Vector& u, const Vector& v);
// a_i -> g(i,k) a_k, b^i -> h(k,i) b^k with g h = 1.
RPresentation change_presentation_basis(const RPresentation& pres, const Matrix& g);
// Block-diagonal sum acting on Mat_{n1 + n2}.
RPresentation direct_sum(const RPresentation& x, const RPresentation& y);

}  // namespace compat
