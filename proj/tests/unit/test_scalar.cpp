#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>

#include "support.hpp"

using namespace compat;

namespace {

// Value of an exact scalar at zeta = exp(2 pi i / N), summed by hand.
std::complex<double> evaluate(const Scalar& s) {
  const double angle = 2 * std::numbers::pi / s.order();
  std::complex<double> acc = 0;
  const auto& c = s.coefficients();
  for (std::size_t k = 0; k < c.size(); ++k) acc += c[k].get_d() * std::polar(1.0, angle * static_cast<double>(k));
  return acc;
}

Scalar random_cyclotomic(std::mt19937_64& rng, int order) {
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  std::vector<mpq_class> c;
  for (int k = 0; k < order; ++k) c.emplace_back(num(rng), den(rng));
  for (auto& x : c) x.canonicalize();
  return Scalar::cyclotomic(order, c);
}

}  // namespace

TEST_SUITE("scalar") {
  TEST_CASE("roots of unity of small order") {
    CHECK(root_of_unity(1) == Scalar(1));
    CHECK(root_of_unity(2) == Scalar(-1));
    const Scalar i = root_of_unity(4);
    CHECK(i * i == Scalar(-1));
    for (int n = 1; n <= 12; ++n) {
      const Scalar z = root_of_unity(n);
      CHECK(z.pow(n).is_one());
      for (int j = 1; j < n; ++j) CHECK_FALSE(z.pow(j).is_one());
    }
  }

  TEST_CASE("cyclotomic reduction") {
    const Scalar z = root_of_unity(3);
    CHECK(z + z * z == Scalar(-1));
    // Canonical form has degree below phi(N).
    for (int n : {3, 4, 5, 6, 8, 12}) {
      const Scalar z = root_of_unity(n);
      Scalar acc = 0;
      for (int k = 0; k < 3 * n; ++k) acc += z.pow(k);
      CHECK(acc.coefficients().size() + 1 <= cyclotomic_polynomial(n).size());
      CHECK(acc.is_zero());
    }
  }

  TEST_CASE("field axioms on random cyclotomic values") {
    std::mt19937_64 rng(11);
    for (int order : {1, 3, 5, 8}) {
      for (int trial = 0; trial < 20; ++trial) {
        const Scalar a = random_cyclotomic(rng, order), b = random_cyclotomic(rng, order),
                     c = random_cyclotomic(rng, order);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
        // Reducing a canonical value again changes nothing.
        CHECK(Scalar::cyclotomic(order, a.coefficients()).coefficients() == a.coefficients());
        // Embedding into floats commutes with arithmetic.
        CHECK(std::abs(evaluate(a * b + c) - evaluate(a) * evaluate(b) - evaluate(c)) < 1e-9);
      }
    }
  }

  TEST_CASE("division by zero is reported") {
    CHECK_THROWS_AS(Scalar(0).inverse(), DivisionByZero);
    CHECK_FALSE(Scalar(0).try_inverse().has_value());
    CHECK_THROWS_AS(Scalar(1) / Scalar(0), DivisionByZero);
  }

  TEST_CASE("float backend uses a relative tolerance") {
    const Field f = Field::floating(1e-9);
    const Scalar big = f.lift(Scalar(1000000));
    CHECK((big + Scalar::complex(1e-7) - big).is_zero());
    CHECK_FALSE(Scalar::complex(1e-6).is_zero());
    const Scalar z = f.root(5);
    CHECK((z.pow(5) - Scalar::complex(1.0)).is_zero());
  }

  TEST_CASE("parse and print round trip") {
    const Field f = Field::cyclotomic(5);
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      const Scalar a = random_cyclotomic(rng, 5);
      CHECK(f.parse(a.str()) == a);
    }
    CHECK(Field::rationals().parse("-3/6").str() == "-1/2");
    CHECK_THROWS_AS(Field::rationals().parse("x+"), std::invalid_argument);
    const Field g = Field::floating();
    CHECK(g.parse(Scalar::complex({0.25, -1.5}).str()) == Scalar::complex({0.25, -1.5}));
  }

  TEST_CASE("field specifications") {
    CHECK(Field::from_spec("rational").exact());
    CHECK(Field::from_spec("cyclotomic:6").order == 6);
    CHECK_FALSE(Field::from_spec("float:1e-6").exact());
    CHECK(Field::from_spec("cyclotomic:6").describe() == "cyclotomic:6");
    CHECK_THROWS_AS(Field::from_spec("quaternion"), std::invalid_argument);
  }
}
