#include <doctest.h>

#include "compat/pencil.hpp"
#include "compat/poisson.hpp"
#include "support.hpp"

using namespace compat;
using testing::apply;
using testing::unit_vector;

namespace {

// Bracket written straight from the coordinate rule, one pair at a time.
StructureConstants bracket_oracle(const StructureConstants& p, std::size_t n) {
  const std::size_t N = p.dim(), D = N * n * n;
  auto at = [&](std::size_t i, std::size_t l, std::size_t m) { return (i * n + l) * n + m; };
  StructureConstants g(D);
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t l1 = 0; l1 < n; ++l1)
      for (std::size_t m1 = 0; m1 < n; ++m1)
        for (std::size_t j = 0; j < N; ++j)
          for (std::size_t l2 = 0; l2 < n; ++l2)
            for (std::size_t m2 = 0; m2 < n; ++m2)
              for (std::size_t k = 0; k < N; ++k) {
                if (m1 == l2) g.at(at(i, l1, m1), at(j, l2, m2), at(k, l1, m2)) += p.at(i, j, k);
                if (m2 == l1) g.at(at(i, l1, m1), at(j, l2, m2), at(k, l2, m1)) -= p.at(j, i, k);
              }
  return g;
}

// {{x,y},z} + cyclic as a linear form, evaluated on basis triples.
bool oracle_jacobi(const StructureConstants& g) {
  const std::size_t d = g.dim();
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        Vector x = unit_vector(d, a), y = unit_vector(d, b), z = unit_vector(d, c);
        Vector s = apply(g, apply(g, x, y), z);
        const Vector t = apply(g, apply(g, y, z), x), u = apply(g, apply(g, z, x), y);
        for (std::size_t k = 0; k < d; ++k)
          if (!(s[k] + t[k] + u[k]).is_zero()) return false;
      }
  return true;
}

Pencil sample_pencil() {
  const std::vector<Scalar> p{1, 3}, q{2, -1};
  return diagonal_pencil(p, q, Scalar(5));
}

}  // namespace

TEST_SUITE("poisson") {
  TEST_CASE("bracket matches the coordinate rule") {
    const auto pen = sample_pencil();
    for (std::size_t n : {1u, 2u}) {
      CHECK(build_bracket(pen.star, n).gamma == bracket_oracle(pen.star, n));
      CHECK(build_bracket(pen.circle, n).gamma == bracket_oracle(pen.circle, n));
    }
    const auto mat = build_bracket(matrix_algebra(2), 2);
    CHECK(mat.dim() == 16);
    CHECK(mat.gamma == bracket_oracle(matrix_algebra(2), 2));
  }

  TEST_CASE("bracket is antisymmetric") {
    const auto b = build_bracket(sample_pencil().circle, 2);
    const std::size_t d = b.dim();
    for (std::size_t x = 0; x < d; ++x)
      for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) CHECK((b.gamma.at(x, y, z) + b.gamma.at(y, x, z)).is_zero());
  }

  TEST_CASE("compatible pencil gives compatible brackets") {
    const auto pen = sample_pencil();
    const auto b1 = build_bracket(pen.star, 2), b2 = build_bracket(pen.circle, 2);
    REQUIRE(b1.dim() == 8);
    CHECK(jacobi_residual(b1).vanishes);
    CHECK(jacobi_residual(b2).vanishes);
    CHECK(poisson_compatibility(b1, b2).vanishes);
    CHECK(oracle_jacobi(b1.gamma));
    CHECK(oracle_jacobi(b2.gamma));
    auto sum = b1.gamma;
    sum += b2.gamma;
    CHECK(oracle_jacobi(sum));
  }

  TEST_CASE("perturbed product is detected") {
    auto pen = sample_pencil();
    auto bad = pen.circle;
    bad.at(0, 1, 1) += 1;
    REQUIRE_FALSE(associator_residual(bad).vanishes);
    const auto b2 = build_bracket(bad, 2);
    const auto jac = jacobi_residual(b2);
    CHECK(jac.vanishes == oracle_jacobi(b2.gamma));
    CHECK_FALSE(jac.vanishes);
    CHECK(jac.witness.size() == 3);
  }

  TEST_CASE("dimension limit") {
    const auto b = build_bracket(matrix_algebra(3), 3);  // 81 coordinates
    CHECK(b.dim() == 81);
    CHECK_THROWS_AS(jacobi_residual(b), std::invalid_argument);
    CHECK_THROWS_AS(poisson_compatibility(b, b), std::invalid_argument);
  }
}
