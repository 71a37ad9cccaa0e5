#include <doctest.h>

#include "compat/pencil.hpp"
#include "support.hpp"

using namespace compat;
using testing::naive_associative;

namespace {

StructureConstants random_constants(std::mt19937_64& rng, std::size_t d) {
  StructureConstants sc(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k) sc.at(i, j, k) = testing::random_rational(rng, -2, 2);
  return sc;
}

// e_i e_j = delta_ij e_i
StructureConstants diagonal_algebra(std::size_t m) {
  StructureConstants sc(m);
  for (std::size_t i = 0; i < m; ++i) sc.at(i, i, i) = 1;
  return sc;
}

}  // namespace

TEST_SUITE("algebra") {
  TEST_CASE("multiply matches a triple-loop contraction") {
    const auto mat2 = matrix_algebra(2);
    // e12 e21 = e11
    const Vector e11 = multiply(mat2, testing::unit_vector(4, 1), testing::unit_vector(4, 2));
    CHECK(e11 == testing::unit_vector(4, 0));
    const auto diag = diagonal_algebra(3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        CHECK(multiply(diag, testing::unit_vector(3, i), testing::unit_vector(3, j)) ==
              (i == j ? testing::unit_vector(3, i) : zero_vector(3)));
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 10; ++trial) {
      const auto sc = random_constants(rng, 3);
      Vector x(3), y(3);
      for (auto& v : x) v = testing::random_rational(rng);
      for (auto& v : y) v = testing::random_rational(rng);
      CHECK(multiply(sc, x, y) == testing::apply(sc, x, y));
    }
    CHECK_THROWS_AS(multiply(mat2, Vector(3), Vector(4)), std::invalid_argument);
  }

  TEST_CASE("matrix algebras are associative") {
    for (std::size_t n = 1; n <= 4; ++n) {
      CHECK(matrix_algebra(n) == testing::naive_matrix_algebra(n));
      CHECK(associator_residual(matrix_algebra(n)).vanishes);
    }
  }

  TEST_CASE("associator agrees with the brute-force scan") {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 10; ++trial) {
      const auto sc = random_constants(rng, 2);
      CHECK(associator_residual(sc).vanishes == naive_associative(sc));
    }
    auto bad = matrix_algebra(2);
    bad.at(1, 2, 0) += 1;
    const auto r = associator_residual(bad);
    CHECK_FALSE(r.vanishes);
    REQUIRE(r.witness.size() == 3);
    CHECK_FALSE(naive_associative(bad));
  }

  TEST_CASE("unity") {
    const auto u = find_unity(matrix_algebra(3));
    REQUIRE(u);
    CHECK(*u == Matrix::identity(3).flatten());
    const auto d = find_unity(diagonal_algebra(4));
    REQUIRE(d);
    CHECK(*d == Vector(4, Scalar(1)));
    CHECK_FALSE(find_unity(zero_algebra(2)).has_value());
  }

  TEST_CASE("semisimplicity and center") {
    CHECK(is_semisimple(matrix_algebra(2)));
    CHECK(center_dimension(matrix_algebra(2)) == 1);
    CHECK(center_dimension(direct_sum(diagonal_algebra(1), diagonal_algebra(1))) == 2);
    // C[x]/(x^2)
    StructureConstants nil(1);
    const auto dual = adjoin_unity(nil);
    CHECK_FALSE(is_semisimple(dual));
    CHECK(rank(trace_form(dual)) == 1);
    const auto sum = direct_sum(matrix_algebra(2), matrix_algebra(3));
    CHECK(is_semisimple(sum));
    CHECK(center_dimension(sum) == 2);
    CHECK_THROWS_AS(is_semisimple(zero_algebra(2)), std::invalid_argument);
  }

  TEST_CASE("matrix lift of a pencil") {
    StructureConstants zero(1), one(1);
    one.at(0, 0, 0) = 1;
    const Pencil scalar{zero, one};
    const auto lifted = matn_lift(scalar, 2);
    CHECK(lifted.star.is_zero());
    CHECK(lifted.circle == matrix_algebra(2));
    const Pencil same = matn_lift(scalar, 1);
    CHECK(same.star == scalar.star);
    CHECK(same.circle == scalar.circle);

    const Vector p{1, 2}, q{3, -1};
    const auto ex = diagonal_pencil(p, q, Scalar(5));
    const auto big = matn_lift(ex, 2);
    CHECK(big.star.dim() == 8);
    CHECK(check_compatibility(big).compatible());
    CHECK(testing::naive_compatible(big.star, big.circle));
  }
}
