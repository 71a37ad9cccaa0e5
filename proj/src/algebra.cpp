#include "compat/algebra.hpp"

#include <algorithm>
#include <stdexcept>

#include "sparse_table.hpp"

namespace compat {

Vector StructureConstants::product(std::size_t i, std::size_t j) const {
  Vector v(dim_);
  for (std::size_t k = 0; k < dim_; ++k) v[k] = at(i, j, k);
  return v;
}

bool StructureConstants::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Scalar& s) { return s.is_zero(); });
}

StructureConstants& StructureConstants::operator+=(const StructureConstants& o) {
  if (o.dim_ != dim_) throw std::invalid_argument("structure constants of different dimension");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

StructureConstants& StructureConstants::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

bool operator==(const StructureConstants& a, const StructureConstants& b) {
  if (a.dim_ != b.dim_) return false;
  for (std::size_t k = 0; k < a.c_.size(); ++k)
    if (!(a.c_[k] == b.c_[k])) return false;
  return true;
}

StructureConstants from_basis_products(std::size_t dim,
                                       const std::function<Vector(std::size_t, std::size_t)>& rule,
                                       std::string label) {
  StructureConstants sc(dim, std::move(label));
  for (std::size_t i = 0; i < dim; ++i) {
    for (std::size_t j = 0; j < dim; ++j) {
      Vector v = rule(i, j);
      if (v.size() != dim) throw std::invalid_argument("product rule returned wrong dimension");
      for (std::size_t k = 0; k < dim; ++k) sc.at(i, j, k) = std::move(v[k]);
    }
  }
  return sc;
}

void Residual::absorb(std::span<const Scalar> values, std::vector<std::size_t> where) {
  bool clean = true;
  for (const auto& v : values) {
    if (!v.is_zero()) clean = false;
    max_abs = std::max(max_abs, v.magnitude());
  }
  if (!clean && vanishes) {
    vanishes = false;
    witness = std::move(where);
  }
}

void Residual::absorb(const Scalar& value, std::vector<std::size_t> where) {
  absorb(std::span<const Scalar>(&value, 1), std::move(where));
}

void Residual::merge(const Residual& other) {
  max_abs = std::max(max_abs, other.max_abs);
  if (!other.vanishes && vanishes) {
    vanishes = false;
    witness = other.witness;
    if (!other.identity.empty()) identity = other.identity;
  }
}

bool IdentityReport::consistent() const { return first_failure() == nullptr; }

const Residual* IdentityReport::first_failure() const {
  for (const auto& f : families)
    if (!f.vanishes) return &f;
  return nullptr;
}

Vector multiply(const StructureConstants& sc, std::span<const Scalar> x, std::span<const Scalar> y) {
  const std::size_t d = sc.dim();
  if (x.size() != d || y.size() != d) throw std::invalid_argument("vector dimension does not match algebra");
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (y[j].is_zero()) continue;
      Scalar w = x[i] * y[j];
      for (std::size_t k = 0; k < d; ++k)
        if (!sc.at(i, j, k).is_zero()) out[k] += w * sc.at(i, j, k);
    }
  }
  return out;
}

Residual associator_residual(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  detail::SparseTable t(sc);
  Residual res;
  res.identity = "associativity";
  detail::Accumulator acc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        acc.clear();
        t.add_left(acc, t, i, j, k, 1);
        t.add_right(acc, t, i, j, k, -1);
        res.absorb(acc.values(), {i, j, k});
      }
  return res;
}

Residual mixed_associator_residual(const StructureConstants& star, const StructureConstants& circle) {
  if (star.dim() != circle.dim()) throw std::invalid_argument("pencil products differ in dimension");
  const std::size_t d = star.dim();
  detail::SparseTable s(star), c(circle);
  Residual res;
  res.identity = "mixed associativity";
  detail::Accumulator acc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        acc.clear();
        s.add_left(acc, c, i, j, k, 1);   // (x*y) o z
        c.add_left(acc, s, i, j, k, 1);   // (x o y) * z
        s.add_right(acc, c, i, j, k, -1);  // x * (y o z)
        c.add_right(acc, s, i, j, k, -1);  // x o (y * z)
        res.absorb(acc.values(), {i, j, k});
      }
  return res;
}

std::optional<Vector> find_unity(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  Matrix eqs(2 * d * d, d);
  Vector rhs(2 * d * d);
  std::size_t row = 0;
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t i = 0; i < d; ++i) {
        eqs(row, i) = sc.at(i, j, k);
        eqs(row + 1, i) = sc.at(j, i, k);
      }
      rhs[row] = rhs[row + 1] = (j == k) ? 1 : 0;
      row += 2;
    }
  return solve(eqs, rhs);
}

Matrix left_regular(const StructureConstants& sc, std::span<const Scalar> x) {
  const std::size_t d = sc.dim();
  Matrix l(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!sc.at(i, j, k).is_zero()) l(k, j) += x[i] * sc.at(i, j, k);
  }
  return l;
}

Matrix trace_form(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  Matrix t(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Scalar acc;
      for (std::size_t k = 0; k < d; ++k)
        for (std::size_t l = 0; l < d; ++l) {
          const Scalar& a = sc.at(i, l, k);
          const Scalar& b = sc.at(j, k, l);
          if (!a.is_zero() && !b.is_zero()) acc += a * b;
        }
      t(i, j) = acc;
    }
  return t;
}

bool is_semisimple(const StructureConstants& sc) {
  if (!associator_residual(sc).vanishes) throw std::invalid_argument("semisimplicity test needs an associative algebra");
  if (!find_unity(sc)) throw std::invalid_argument("semisimplicity test needs an algebra with unity");
  return rank(trace_form(sc)) == sc.dim();
}

std::size_t center_dimension(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  Matrix eqs(d * d, d);
  for (std::size_t j = 0; j < d; ++j)
    for (std::size_t k = 0; k < d; ++k)
      for (std::size_t i = 0; i < d; ++i) eqs(j * d + k, i) = sc.at(i, j, k) - sc.at(j, i, k);
  return d - rank(eqs);
}

StructureConstants matrix_algebra(std::size_t n) {
  StructureConstants sc(n * n, "Mat" + std::to_string(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) sc.at(i * n + j, j * n + l, i * n + l) = 1;
  return sc;
}

StructureConstants zero_algebra(std::size_t dim) { return StructureConstants(dim, "zero"); }

StructureConstants direct_sum(const StructureConstants& a, const StructureConstants& b) {
  const std::size_t da = a.dim(), db = b.dim();
  StructureConstants sc(da + db);
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) sc.at(i, j, k) = a.at(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) sc.at(da + i, da + j, da + k) = b.at(i, j, k);
  return sc;
}

StructureConstants adjoin_unity(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  StructureConstants out(d + 1, sc.label());
  out.at(0, 0, 0) = 1;
  for (std::size_t i = 0; i < d; ++i) {
    out.at(0, i + 1, i + 1) = 1;
    out.at(i + 1, 0, i + 1) = 1;
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) out.at(i + 1, j + 1, k + 1) = sc.at(i, j, k);
  }
  return out;
}

StructureConstants matn_lift(const StructureConstants& sc, std::size_t n) {
  const std::size_t d = sc.dim();
  StructureConstants out(n * n * d);
  auto idx = [&](std::size_t a, std::size_t b, std::size_t i) { return (a * n + b) * d + i; };
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < d; ++i)
          for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) out.at(idx(a, b, i), idx(b, c, j), idx(a, c, k)) = sc.at(i, j, k);
  return out;
}

Pencil matn_lift(const Pencil& pencil, std::size_t n) {
  return {matn_lift(pencil.star, n), matn_lift(pencil.circle, n)};
}

}  // namespace compat
