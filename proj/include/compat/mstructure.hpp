#pragma once

#include <cstddef>

#include "compat/matrix_ops.hpp"
#include "compat/pm_algebra.hpp"

namespace compat {

// One-block presentation: generators A_i, B^i (i < p) and C with the relations
// of MTensors, plus optional explicit C actions
//   C A_j = mu(j,k) B^k + act_a(j,l) A_l + unit_a(j),
//   B^j C = lambda(k,j) A_k + act_b(j,l) B^l + unit_b(j).
struct MPresentation {
  MTensors tensors;
  bool has_c_actions = false;
  Tensor2 act_a, act_b;
  Vector unit_a, unit_b;

  std::size_t p() const { return tensors.p; }
};

// C actions forced by centrality of K, in closed form.
MPresentation with_centrality_actions(MPresentation m);
PMPresentation to_pm(const MPresentation& m);
MPresentation from_pm(const PMPresentation& pm);

using UElement = PMUElement;
UElement u_unit();
UElement u_a(std::size_t i);
UElement u_b(std::size_t i);
UElement u_k(int power = 1);
UElement u_c(const MPresentation& m);  // C = K - A_i B^i
UElement u_multiply(const UElement& x, const UElement& y, const MPresentation& m);

IdentityReport check_consistency(const MPresentation& m);
Residual check_K_central(const MPresentation& m);

// Matrix relations of the presentation, non-degeneracy of {1, a} and {1, b}, and
// associativity plus compatibility of the resulting second product on Mat_n.
IdentityReport validate_representation(const MPresentation& m, const RPresentation& rep);

// Cyclic structure of order N = p + 1 over Q(zeta_N): A_i = A^i, and B^i is the
// dual basis element B^{-i} / (eps^{-i} - 1), all exponents taken mod N. The
// C actions are stored explicitly. A floating field evaluates eps numerically.
MPresentation cyclic_mstructure(std::size_t p, const Field& field);
MPresentation cyclic_mstructure(std::size_t p);

// A -> a (cyclic shift with a t = eps t a), B -> (eps t - 1)(t - 1)^{-1} a,
// C -> t (t - 1)^{-1} for t = s diag(1, eps, ..., eps^p), written in the
// generators of cyclic_mstructure. Throws if t - 1 is singular.
RPresentation cyclic_representation(std::size_t p, const Scalar& s, const Field& field);
RPresentation cyclic_representation(std::size_t p, const Scalar& s);

}  // namespace compat
