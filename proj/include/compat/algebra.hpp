#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compat/matrix.hpp"
#include "compat/scalar.hpp"

namespace compat {

// Bilinear product on a d-dimensional space: e_i * e_j = sum_k c(i,j,k) e_k.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(std::size_t dim, std::string label = {})
      : dim_(dim), c_(dim * dim * dim), label_(std::move(label)) {}

  std::size_t dim() const { return dim_; }
  const std::string& label() const { return label_; }
  void set_label(std::string label) { label_ = std::move(label); }

  Scalar& at(std::size_t i, std::size_t j, std::size_t k) { return c_[(i * dim_ + j) * dim_ + k]; }
  const Scalar& at(std::size_t i, std::size_t j, std::size_t k) const {
    return c_[(i * dim_ + j) * dim_ + k];
  }
  Vector product(std::size_t i, std::size_t j) const;
  bool is_zero() const;

  StructureConstants& operator+=(const StructureConstants& o);
  StructureConstants& operator*=(const Scalar& s);
  friend StructureConstants operator+(StructureConstants a, const StructureConstants& b) { return a += b; }
  friend StructureConstants operator*(const Scalar& s, StructureConstants a) { return a *= s; }
  friend bool operator==(const StructureConstants& a, const StructureConstants& b);

 private:
  std::size_t dim_ = 0;
  std::vector<Scalar> c_;
  std::string label_;
};

// Builds constants from a rule giving the product of two basis vectors.
StructureConstants from_basis_products(std::size_t dim,
                                       const std::function<Vector(std::size_t, std::size_t)>& rule,
                                       std::string label = {});

// Outcome of an identity scan over basis tuples. `vanishes` is decided with the
// field's own zero test; `max_abs` is the largest complex modulus seen.
struct Residual {
  bool vanishes = true;
  double max_abs = 0.0;
  std::vector<std::size_t> witness;  // first offending basis tuple
  std::string identity;              // name of the identity that was checked

  void absorb(std::span<const Scalar> values, std::vector<std::size_t> where);
  void absorb(const Scalar& value, std::vector<std::size_t> where);
  void merge(const Residual& other);
};

// Residuals of several named identity families.
struct IdentityReport {
  std::vector<Residual> families;
  bool consistent() const;
  const Residual* first_failure() const;
};

struct Pencil {
  StructureConstants star;
  StructureConstants circle;
};

Vector multiply(const StructureConstants& sc, std::span<const Scalar> x, std::span<const Scalar> y);

// (e_i e_j) e_k - e_i (e_j e_k) over all basis triples.
Residual associator_residual(const StructureConstants& sc);
// (x*y)o z + (x o y)*z - x*(y o z) - x o(y*z): the cross term of the pencil.
Residual mixed_associator_residual(const StructureConstants& star, const StructureConstants& circle);

std::optional<Vector> find_unity(const StructureConstants& sc);
// Left regular representation: column j of L_x is x * e_j.
Matrix left_regular(const StructureConstants& sc, std::span<const Scalar> x);
Matrix trace_form(const StructureConstants& sc);
bool is_semisimple(const StructureConstants& sc);  // throws unless associative with unity
std::size_t center_dimension(const StructureConstants& sc);

StructureConstants matrix_algebra(std::size_t n);  // basis e_{ij} at index i*n+j
StructureConstants zero_algebra(std::size_t dim);
StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b);
// Basis vector 0 becomes the new unity, old basis shifted by one.
StructureConstants adjoin_unity(const StructureConstants& sc);

// Products on Mat_n(V): (E_{ab} x)(E_{cd} y) = delta_{bc} E_{ad} (x y).
// Coordinate of E_{ab} (x) e_i is (a*n + b)*d + i.
StructureConstants matn_lift(const StructureConstants& sc, std::size_t n);
Pencil matn_lift(const Pencil& pencil, std::size_t n);

}  // namespace compat
