#include <doctest.h>

#include "compat/pencil.hpp"
#include "support.hpp"

using namespace compat;
using testing::constants_of;
using testing::random_matrix;

namespace {

// R as a dense operator on the row-major coordinates of Mat_n.
template <class F>
LinearOperator dense(std::size_t n, F r) {
  const std::size_t d = n * n;
  LinearOperator op(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix image = r(Matrix::unit(n, i / n, i % n));
    for (std::size_t k = 0; k < d; ++k) op(k, i) = image(k / n, k % n);
  }
  return op;
}

Matrix singular_matrix(std::mt19937_64& rng) {
  const Scalar a = testing::random_rational(rng, 1, 4), b = testing::random_rational(rng), c = testing::random_rational(rng);
  return Matrix::from_rows({{a, b}, {c * a, c * b}});
}

// Polynomial extension read off from the generating function by evaluation at
// disjoint node sets and two Vandermonde solves.
StructureConstants extension_oracle(const Pencil& p, const Vector& q, bool example_form = false) {
  const std::size_t d = p.star.dim(), m = q.size() - 1;
  auto poly = [&](const Scalar& z) {
    Scalar acc = 0;
    for (std::size_t k = q.size(); k-- > 0;) acc = acc * z + q[k];
    return acc;
  };
  Vector us, vs;
  for (std::size_t r = 0; r < m; ++r) {
    us.push_back(Scalar(static_cast<long>(r + 1)));
    vs.push_back(Scalar::fraction(-static_cast<long>(2 * r + 1), 3));
  }
  auto vandermonde = [&](const Vector& nodes) {
    Matrix v(m, m);
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t a = 0; a < m; ++a) v(r, a) = nodes[r].pow(static_cast<long>(a));
    return *inverse(v);
  };
  const Matrix iu = vandermonde(us), iv = vandermonde(vs);
  StructureConstants out(d * m);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      const Vector star = p.star.product(i, j), circle = p.circle.product(i, j);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t k = 0; k < d; ++k) {
          // Component along e_k (x) t^c of the right-hand side.
          auto rhs = [&](const Scalar& u, const Scalar& v) {
            const Scalar w_u = star[k] * u.pow(static_cast<long>(c)) + circle[k] * u.pow(static_cast<long>(c + 1));
            const Scalar w_v = star[k] * v.pow(static_cast<long>(c)) + circle[k] * v.pow(static_cast<long>(c + 1));
            if (example_form) {
              // E(u) E(v) = [u q(v) E(u) - v q(u) E(v)] / (u - v), one basis vector per power.
              const auto cc = static_cast<long>(c);
              return (u * poly(v) * u.pow(cc) - v * poly(u) * v.pow(cc)) / (u - v);
            }
            return (poly(u) * w_v - poly(v) * w_u) / (u - v);
          };
          Matrix values(m, m);
          for (std::size_t r = 0; r < m; ++r)
            for (std::size_t s = 0; s < m; ++s) values(r, s) = rhs(us[r], vs[s]);
          const Matrix coef = iu * values * iv.transpose();
          for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) out.at(a * d + i, b * d + j, c * d + k) = coef(a, b);
        }
    }
  return out;
}

Pencil trivial_pair() {
  StructureConstants zero(1), one(1);
  one.at(0, 0, 0) = 1;
  return {zero, one};
}

Pencil example_pencil() {
  const Vector p{1, 3}, q{2, -1};
  return diagonal_pencil(p, q, Scalar(4));
}

}  // namespace

TEST_SUITE("pencil") {
  TEST_CASE("zero second product is compatible") {
    const auto mat = matrix_algebra(2);
    const auto r = check_compatibility({mat, zero_algebra(4)});
    CHECK(r.compatible());
    CHECK(r.mixed.max_abs == 0.0);
  }

  TEST_CASE("left multiplication by a fixed element") {
    std::mt19937_64 rng(1);
    const auto mat = matrix_algebra(2);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_matrix(rng, 2);
      const auto expected = constants_of(2, [&](const Matrix& x, const Matrix& y) { return x * a * y; });
      const auto circle = deform_by_R(mat, left_multiplication(mat, a.flatten()));
      CHECK(circle == expected);
      CHECK(check_compatibility({mat, circle}).compatible());
      CHECK(testing::naive_compatible(mat, circle));
      CHECK(yang_baxter_residual(left_multiplication(mat, a.flatten()), mat).vanishes);
    }
  }

  TEST_CASE("commutator product on 2x2 matrices") {
    std::mt19937_64 rng(2);
    const auto mat = matrix_algebra(2);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_matrix(rng, 2), b = random_matrix(rng, 2);
      const auto expected =
          constants_of(2, [&](const Matrix& x, const Matrix& y) { return (a * x - x * a) * (b * y - y * b); });
      const auto r = dense(2, [&](const Matrix& x) { return a * (x * b - b * x); });
      CHECK(deform_by_R(mat, r) == expected);
      CHECK(check_compatibility({mat, expected}).compatible());
    }
  }

  TEST_CASE("deformation by the identity reproduces the product") {
    const auto mat = matrix_algebra(3);
    CHECK(deform_by_R(mat, Matrix::identity(9)) == mat);
  }

  TEST_CASE("single-operator equation") {
    const auto mat = matrix_algebra(2);
    const LinearOperator zero(4, 4);
    CHECK(yang_baxter_residual(zero, zero, mat).vanishes);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = singular_matrix(rng), b = random_matrix(rng, 2);
      const auto r = dense(2, [&](const Matrix& x) { return a * (x * b - b * x); });
      CHECK(yang_baxter_residual(r, mat).vanishes);
      // A vanishing residual makes the deformation compatible.
      CHECK(verified_deform(mat, r).report.compatible());
    }
  }

  TEST_CASE("shifting R by an inner derivation") {
    const auto mat = matrix_algebra(2);
    std::mt19937_64 rng(4);
    const auto r = random_matrix(rng, 4);
    CHECK(equivalent_shift(r, Matrix::identity(2).flatten(), mat) == r);
    for (int trial = 0; trial < 5; ++trial) {
      const Matrix a = random_matrix(rng, 2);
      const auto shifted = equivalent_shift(r, a.flatten(), mat);
      CHECK(deform_by_R(mat, shifted) == deform_by_R(mat, r));
    }
    // Commutative product: every inner derivation vanishes.
    const auto diag = example_pencil().star;
    const Vector a{5, -2};
    const auto r2 = random_matrix(rng, 2);
    CHECK(equivalent_shift(r2, a, diag) == r2);
  }

  TEST_CASE("diagonal pencil") {
    const Vector p{1, 2};
    const Scalar q1 = Scalar::fraction(3, 2), q2 = 7;
    const Vector q{q1, q2};
    const auto r = diagonal_pencil_operator(p, q, Scalar(1));
    // Column i holds R(e_i) = sum_j r_ij e_j.
    CHECK(r(1, 0) == Scalar(-2) * q1);
    CHECK(r(0, 1) == q2);
    // sum_k r_ki = q0, and r_ki sits at (i, k).
    for (std::size_t i = 0; i < 2; ++i) CHECK(r(i, 0) + r(i, 1) == Scalar(1));

    const Vector zeros(3);
    const Vector p3{2, -1, 5};
    CHECK(diagonal_pencil(p3, zeros, Scalar(0)).circle.is_zero());

    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 3; ++trial) {
      Vector q3(3);
      for (auto& x : q3) x = testing::random_fraction(rng);
      const auto pencil = diagonal_pencil(p3, q3, testing::random_fraction(rng));
      CHECK(testing::naive_compatible(pencil.star, pencil.circle));
      CHECK(associator_residual(pencil.circle).vanishes);
      CHECK(deform_by_R(pencil.star, diagonal_pencil_operator(p3, q3, Scalar(0))) ==
            diagonal_pencil(p3, q3, Scalar(0)).circle);
    }
    const Vector clash{1, 1};
    CHECK_THROWS(diagonal_pencil(clash, q, Scalar(0)));
  }

  TEST_CASE("polynomial extension agrees with the interpolation oracle") {
    std::mt19937_64 rng(7);
    for (const auto& pencil : {trivial_pair(), example_pencil()})
      for (std::size_t m = 1; m <= 3; ++m) {
        Vector q(m + 1);
        for (auto& x : q) x = testing::random_fraction(rng);
        q[m] = testing::random_rational(rng, 1, 3);
        const auto ext = polynomial_extension(pencil, q);
        CHECK(ext == extension_oracle(pencil, q));
        CHECK(testing::naive_associative(ext));
      }
  }

  TEST_CASE("scalar pair gives the generating-function algebra with q negated") {
    std::mt19937_64 rng(8);
    for (std::size_t m = 1; m <= 3; ++m) {
      Vector q(m + 1), neg(m + 1);
      for (std::size_t k = 0; k <= m; ++k) {
        q[k] = testing::random_fraction(rng);
        if (k == m && q[k].is_zero()) q[k] = 1;
        neg[k] = -q[k];
      }
      CHECK(polynomial_extension(trivial_pair(), q) == extension_oracle(trivial_pair(), neg, true));
    }
  }

  TEST_CASE("linear polynomial gives the shifted product") {
    const auto pencil = example_pencil();
    const Scalar b = Scalar::fraction(5, 3);
    const Vector q{-b, 1};
    CHECK(polynomial_extension(pencil, q) == pencil.star + b * pencil.circle);
  }

  TEST_CASE("extension is additive in q") {
    const auto pencil = example_pencil();
    const Vector q1{1, 2, 3}, q2{-4, 0, 1}, sum{-3, 2, 4};
    CHECK(polynomial_extension(pencil, sum) ==
          polynomial_extension(pencil, q1) + polynomial_extension(pencil, q2));
    const Vector bad{1, 2, 0};
    CHECK_THROWS_AS(polynomial_extension(pencil, bad), std::invalid_argument);
  }

  TEST_CASE("monomial family") {
    CHECK(extension_family_compatible(trivial_pair(), 1));
    CHECK(extension_family_compatible(example_pencil(), 2));
    std::mt19937_64 rng(9);
    const auto mat = matrix_algebra(2);
    const Matrix a = random_matrix(rng, 2);
    const Pencil derived{mat, deform_by_R(mat, left_multiplication(mat, a.flatten()))};
    CHECK(extension_family_compatible(derived, 3));
  }

  TEST_CASE("splitting at distinct roots") {
    const Vector r12{1, 2};
    CHECK(extension_decompose_check(trivial_pair(), r12));
    // For the scalar pair the component at b is the one-dimensional algebra 1 * 1 = b.
    const Vector q{2, -3, 1};  // (u - 1)(u - 2)
    const auto ext = polynomial_extension(trivial_pair(), q);
    CHECK(ext.dim() == 2);
    const Vector r1{Scalar::fraction(-2, 7)};
    CHECK(extension_decompose_check(example_pencil(), r1));
    const Vector generic{Scalar::fraction(1, 2), 3};
    CHECK(extension_decompose_check(example_pencil(), generic));
    const Vector repeated{2, 2};
    CHECK_THROWS(extension_decompose_check(example_pencil(), repeated));
  }
}
