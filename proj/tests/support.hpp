#pragma once

// Generators and brute-force oracles shared by the tests. Nothing here calls
// the code under test beyond the value types.

#include <cstdint>
#include <random>
#include <vector>

#include "compat/algebra.hpp"
#include "compat/matrix.hpp"

namespace testing {

using namespace compat;

inline Scalar random_rational(std::mt19937_64& rng, long lo = -5, long hi = 5) {
  std::uniform_int_distribution<long> d(lo, hi);
  return Scalar(d(rng));
}

inline Scalar random_fraction(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 7);
  return Scalar::fraction(num(rng), den(rng));
}

inline Matrix random_matrix(std::mt19937_64& rng, std::size_t n, long lo = -4, long hi = 4) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = random_rational(rng, lo, hi);
  return m;
}

// Naive product of unit matrices e_{ij} e_{kl} = [j = k] e_{il}, row-major.
inline StructureConstants naive_matrix_algebra(std::size_t n) {
  StructureConstants sc(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l) sc.at(i * n + j, j * n + l, i * n + l) = 1;
  return sc;
}

// Structure constants of a bilinear map on Mat_n, evaluated on unit matrices.
template <class F>
StructureConstants constants_of(std::size_t n, F product) {
  const std::size_t d = n * n;
  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Matrix z = product(Matrix::unit(n, i / n, i % n), Matrix::unit(n, j / n, j % n));
      for (std::size_t k = 0; k < d; ++k) sc.at(i, j, k) = z(k / n, k % n);
    }
  return sc;
}

// Direct evaluation of a product on basis vectors.
inline Vector apply(const StructureConstants& sc, const Vector& x, const Vector& y) {
  const std::size_t d = sc.dim();
  Vector out(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      if (!x[i].is_zero() && !y[j].is_zero())
        for (std::size_t k = 0; k < d; ++k) out[k] += x[i] * y[j] * sc.at(i, j, k);
  return out;
}

inline Vector unit_vector(std::size_t d, std::size_t i) {
  Vector v(d);
  v[i] = 1;
  return v;
}

// (x*y)*z - x*(y*z) on every basis triple, the slow way.
inline bool naive_associative(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) {
        const Vector ei = unit_vector(d, i), ej = unit_vector(d, j), ek = unit_vector(d, k);
        const Vector l = apply(sc, apply(sc, ei, ej), ek), r = apply(sc, ei, apply(sc, ej, ek));
        for (std::size_t c = 0; c < d; ++c)
          if (!(l[c] == r[c])) return false;
      }
  return true;
}

// Associativity of x*y + x o y, i.e. of both products plus the mixed identity.
inline bool naive_compatible(const StructureConstants& star, const StructureConstants& circle) {
  return naive_associative(star) && naive_associative(circle) && naive_associative(star + circle) &&
         naive_associative(star + Scalar(2) * circle);
}

inline bool all_vanish(const IdentityReport& r) {
  for (const auto& f : r.families)
    if (!f.vanishes) return false;
  return true;
}

}  // namespace testing
