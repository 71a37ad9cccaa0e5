#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "compat/mstructure.hpp"

namespace compat {

// Second subalgebra paired with a diagonal first subalgebra A_i A_j = delta_ij A_i:
//   B^i B^j = (u_i - q(i,j)) B^i + q(i,j) B^j + v_i  (i != j),   (B^i)^2 = u_i B^i + v_i.
// The diagonal of q is ignored.
struct CommutativeData {
  Vector u;
  Vector v;
  Matrix q;
  std::size_t size() const { return u.size(); }
};

// Associativity conditions on the data:
//   q_ij^2 = u_i q_ij + v_i,  (u_i - q_ij)^2 = u_j (u_i - q_ij) + v_j,
//   (q_ik - q_jk)(q_ik - q_ij) = 0 for distinct i, j, k.
IdentityReport commutative_data_residual(const CommutativeData& d);

struct CommutativeAStructure {
  StructureConstants b_algebra;  // unity at index 0, B^i at index i + 1
  MPresentation presentation;    // with its C actions
};
// Throws std::invalid_argument naming the violated condition and indices.
CommutativeAStructure commutative_a_structure(const CommutativeData& d);

enum class CommutativeTag { regular, commutative, single_class, two_classes, mat2, unrecognized };
std::string to_string(CommutativeTag tag);

struct CommutativeClassification {
  CommutativeTag tag = CommutativeTag::unrecognized;
  std::vector<std::size_t> u_class;       // i ~ j iff u_i = u_j
  std::vector<std::size_t> strict_class;  // i ~ j with q_ij = q_ji as well
  std::size_t class_count = 0;            // number of u-classes
  std::optional<Scalar> tau;              // shift parameter when it is determined
  Matrix class_q;                         // q between strict classes (single-class case)
};
// Precondition: the associativity conditions hold (throws otherwise).
CommutativeClassification classify_commutative_a(const CommutativeData& d);

}  // namespace compat
