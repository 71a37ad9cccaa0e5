#include "compat/pencil.hpp"

#include <stdexcept>

#include "sparse_table.hpp"

namespace compat {

namespace {

Vector column_of(const LinearOperator& r, std::size_t j) {
  Vector v(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) v[i] = r(i, j);
  return v;
}

void require_operator(const LinearOperator& r, const StructureConstants& star) {
  if (!r.square() || r.rows() != star.dim())
    throw std::invalid_argument("operator size does not match the algebra");
}

}  // namespace

CompatibilityReport check_compatibility(const Pencil& p) {
  if (p.star.dim() != p.circle.dim()) throw std::invalid_argument("pencil products differ in dimension");
  CompatibilityReport r{associator_residual(p.star), associator_residual(p.circle),
                        mixed_associator_residual(p.star, p.circle)};
  r.star.identity = "star associativity";
  r.circle.identity = "circle associativity";
  return r;
}

StructureConstants deform_by_R(const StructureConstants& star, const LinearOperator& r) {
  require_operator(r, star);
  const std::size_t d = star.dim();
  std::vector<Vector> images(d);
  for (std::size_t j = 0; j < d; ++j) images[j] = column_of(r, j);
  return from_basis_products(d, [&](std::size_t i, std::size_t j) {
    Vector ei = basis_vector(d, i), ej = basis_vector(d, j);
    Vector xy = star.product(i, j);
    return multiply(star, images[i], ej) + multiply(star, ei, images[j]) - r * xy;
  });
}

Deformation verified_deform(const StructureConstants& star, const LinearOperator& r) {
  StructureConstants circle = deform_by_R(star, r);
  CompatibilityReport report = check_compatibility({star, circle});
  return {std::move(circle), std::move(report)};
}

Residual yang_baxter_residual(const LinearOperator& r, const LinearOperator& s,
                              const StructureConstants& star) {
  require_operator(r, star);
  require_operator(s, star);
  const std::size_t d = star.dim();
  std::vector<Vector> rx(d), sx(d);
  for (std::size_t j = 0; j < d; ++j) {
    rx[j] = column_of(r, j);
    sx[j] = column_of(s, j);
  }
  Residual res;
  res.identity = "operator Yang-Baxter";
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Vector ei = basis_vector(d, i), ej = basis_vector(d, j);
      Vector xy = star.product(i, j);
      Vector v = r * (multiply(star, rx[i], ej) + multiply(star, ei, rx[j]));
      v = v - multiply(star, rx[i], rx[j]) - r * (r * xy);
      v = v - multiply(star, sx[i], ej) - multiply(star, ei, sx[j]) + s * xy;
      res.absorb(v, {i, j});
    }
  return res;
}

Residual yang_baxter_residual(const LinearOperator& r, const StructureConstants& star) {
  return yang_baxter_residual(r, LinearOperator(star.dim(), star.dim()), star);
}

LinearOperator left_multiplication(const StructureConstants& star, std::span<const Scalar> a) {
  return left_regular(star, a);
}

LinearOperator right_multiplication(const StructureConstants& star, std::span<const Scalar> a) {
  const std::size_t d = star.dim();
  Matrix m(d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t i = 0; i < d; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t k = 0; k < d; ++k)
        if (!star.at(j, i, k).is_zero()) m(k, j) += a[i] * star.at(j, i, k);
    }
  return m;
}

LinearOperator equivalent_shift(const LinearOperator& r, std::span<const Scalar> a,
                                const StructureConstants& star) {
  require_operator(r, star);
  return r + left_multiplication(star, a) - right_multiplication(star, a);
}

namespace {

// r(i, j) = r_ij of the diagonal pencil.
Matrix diagonal_pencil_table(std::span<const Scalar> p, std::span<const Scalar> q, const Scalar& q0) {
  const std::size_t m = p.size();
  if (q.size() != m) throw std::invalid_argument("p and q differ in length");
  Matrix r(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i == j) continue;
      Scalar gap = p[i] - p[j];
      if (gap.is_zero()) throw std::invalid_argument("coincident p values");
      r(i, j) = q[i] * p[j] / gap;
    }
  for (std::size_t i = 0; i < m; ++i) {
    Scalar s = q0;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) s -= r(k, i);
    r(i, i) = s;
  }
  return r;
}

}  // namespace

LinearOperator diagonal_pencil_operator(std::span<const Scalar> p, std::span<const Scalar> q, const Scalar& q0) {
  return diagonal_pencil_table(p, q, q0).transpose();
}

Pencil diagonal_pencil(std::span<const Scalar> p, std::span<const Scalar> q, const Scalar& q0) {
  const std::size_t m = p.size();
  Matrix r = diagonal_pencil_table(p, q, q0);
  StructureConstants star(m, "diagonal");
  StructureConstants circle(m, "diagonal pencil");
  for (std::size_t i = 0; i < m; ++i) {
    star.at(i, i, i) = 1;
    for (std::size_t j = 0; j < m; ++j) {
      circle.at(i, j, j) += r(i, j);
      circle.at(i, j, i) += r(j, i);
      if (i == j)
        for (std::size_t k = 0; k < m; ++k) circle.at(i, i, k) -= r(i, k);
    }
  }
  return {std::move(star), std::move(circle)};
}

namespace {

// Extension product with m fixed independently of the degree of q.
StructureConstants extension_product(const Pencil& p, std::span<const Scalar> q, std::size_t m) {
  const std::size_t d = p.star.dim();
  if (p.circle.dim() != d) throw std::invalid_argument("pencil products differ in dimension");
  if (q.size() > m + 1) throw std::invalid_argument("polynomial degree exceeds m");
  const std::size_t dim = d * m;
  StructureConstants out(dim, "polynomial extension");
  auto coeff = [&](std::size_t i) -> const Scalar* { return i < q.size() ? &q[i] : nullptr; };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      // x_a y_b = sum over i + j = a + b + 1 of sign * q_i w_j, where the
      // sign is +1 for j <= a < i and -1 for i <= a < j.
      const std::size_t total = a + b + 1;
      for (std::size_t i = 0; i <= std::min(total, m); ++i) {
        const std::size_t j = total - i;
        if (j > m) continue;
        const Scalar* qi = coeff(i);
        if (!qi || qi->is_zero()) continue;
        int sign = 0;
        if (j <= a && a < i) sign = 1;
        if (i <= a && a < j) sign = -1;
        if (sign == 0) continue;
        Scalar f = sign > 0 ? *qi : -*qi;
        // w_j = (x*y) (x) t^j + (x o y) (x) t^(j-1)
        for (std::size_t k = 0; k < d; ++k)
          for (std::size_t l = 0; l < d; ++l)
            for (std::size_t r = 0; r < d; ++r) {
              if (j < m && !p.star.at(k, l, r).is_zero())
                out.at(a * d + k, b * d + l, j * d + r) += f * p.star.at(k, l, r);
              if (j >= 1 && !p.circle.at(k, l, r).is_zero())
                out.at(a * d + k, b * d + l, (j - 1) * d + r) += f * p.circle.at(k, l, r);
            }
      }
    }
  return out;
}

}  // namespace

StructureConstants polynomial_extension(const Pencil& p, std::span<const Scalar> q) {
  if (q.size() < 2 || q.back().is_zero())
    throw std::invalid_argument("polynomial needs degree >= 1 and a nonzero leading coefficient");
  return extension_product(p, q, q.size() - 1);
}

bool extension_family_compatible(const Pencil& p, std::size_t m) {
  if (m == 0) throw std::invalid_argument("extension degree must be positive");
  std::vector<StructureConstants> family;
  for (std::size_t j = 0; j <= m; ++j) {
    Vector q(j + 1);
    q[j] = 1;
    family.push_back(extension_product(p, q, m));
  }
  for (std::size_t j = 0; j <= m; ++j) {
    if (!associator_residual(family[j]).vanishes) return false;
    for (std::size_t l = j + 1; l <= m; ++l)
      if (!mixed_associator_residual(family[j], family[l]).vanishes) return false;
  }
  return true;
}

bool extension_decompose_check(const Pencil& p, std::span<const Scalar> roots) {
  const std::size_t m = roots.size();
  const std::size_t d = p.star.dim();
  if (m == 0) throw std::invalid_argument("no roots given");
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if ((roots[i] - roots[j]).is_zero()) throw std::invalid_argument("coincident roots");

  // q = prod (u - b_i), built up one linear factor at a time.
  Vector q{Scalar(1)};
  for (const auto& b : roots) {
    Vector next(q.size() + 1);
    for (std::size_t k = 0; k < q.size(); ++k) {
      next[k + 1] += q[k];
      next[k] -= b * q[k];
    }
    q = std::move(next);
  }
  StructureConstants ext = polynomial_extension(p, q);

  // psi_i(x) = x(b_i) / q'(b_i)
  auto embed = [&](std::size_t i, std::span<const Scalar> x) {
    Scalar dq = 1;
    for (std::size_t k = 0; k < m; ++k)
      if (k != i) dq *= roots[i] - roots[k];
    Scalar scale = dq.inverse();
    Vector out(d * m);
    Scalar power = scale;
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t k = 0; k < d; ++k)
        if (!x[k].is_zero()) out[a * d + k] = power * x[k];
      power *= roots[i];
    }
    return out;
  };

  std::vector<Vector> images;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < d; ++k) images.push_back(embed(i, basis_vector(d, k)));
  if (rank(columns(images, d * m)) != d * m) return false;

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          Vector got = multiply(ext, images[i * d + k], images[j * d + l]);
          if (i != j) {
            if (!is_zero(got)) return false;
            continue;
          }
          Vector local = p.star.product(k, l) + roots[i] * p.circle.product(k, l);
          if (!is_zero(got - embed(i, local))) return false;
        }
  return true;
}

}  // namespace compat
