#include <doctest.h>

#include "compat/commutative.hpp"
#include "commutative_samples.hpp"

using namespace compat;

namespace {

using namespace testing;

bool oracle_regular(const CommutativeData& d) {
  const Scalar tau = d.q(0, 1) - d.u[0];
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (!(d.v[i] == tau * tau + d.u[i] * tau)) return false;
    for (std::size_t j = 0; j < d.size(); ++j)
      if (i != j && !(d.q(i, j) == d.u[i] + tau)) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE("commutative") {
  TEST_CASE("residual agrees with associativity of the second algebra") {
    const std::vector<CommutativeData> good{regular({1, 2, 5}, Scalar(3)), regular({0, 0, 4, 7}, Scalar(0)),
                                            commutative_example(3), mat2_example(2, -1, 5)};
    for (const auto& d : good) {
      CHECK(oracle_valid(d));
      CHECK(testing::all_vanish(commutative_data_residual(d)));
    }
    auto bad = regular({1, 2, 5}, Scalar(3));
    bad.q(0, 2) += Scalar(1);
    CHECK_FALSE(oracle_valid(bad));
    CHECK_FALSE(testing::all_vanish(commutative_data_residual(bad)));
    CHECK_THROWS_WITH_AS(commutative_a_structure(bad), doctest::Contains("fails at"), std::invalid_argument);
  }

  TEST_CASE("constructed second algebra matches the relations") {
    for (const auto& d : {regular({1, 2, 5}, Scalar(0)), commutative_example(3), mat2_example(1, 3, -2)}) {
      const auto built = commutative_a_structure(d);
      CHECK(built.b_algebra == b_algebra_oracle(d));
      CHECK(testing::all_vanish(check_consistency(built.presentation)));
      CHECK(check_K_central(built.presentation).vanishes);
      std::mt19937_64 rng(41);
      CHECK(pm_sampled_associativity(to_pm(built.presentation), rng, 30, 2).vanishes);
    }
  }

  TEST_CASE("regular algebra with tau = 0") {
    const Vector u{2, -1, 3};
    const auto built = commutative_a_structure(regular(u, Scalar(0)));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        if (i != j) {
          Vector expected(4);
          expected[j + 1] = u[i];
          CHECK(built.b_algebra.product(i + 1, j + 1) == expected);
        }
  }

  TEST_CASE("index subsets span subalgebras") {
    const auto sc = commutative_a_structure(mat2_example(2, -1, 5)).b_algebra;
    for (std::size_t i = 1; i < 4; ++i)
      for (std::size_t j = 1; j < 4; ++j)
        for (std::size_t k = 1; k < 4; ++k)
          if (k != i && k != j) CHECK(sc.at(i, j, k).is_zero());
  }

  TEST_CASE("derived identities hold on solutions") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 10; ++trial) {
      const auto d = sample_three_class(rng);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          if (i == j) continue;
          CHECK((d.q(i, j) - d.u[i]) * (d.u[i] - d.u[j]) == d.v[i] - d.v[j]);
          CHECK((d.q(i, j) - d.q(j, i) - d.u[i] + d.u[j]) * (d.u[i] - d.u[j]) == Scalar(0));
          for (std::size_t k = 0; k < 4; ++k)
            if (k != i && k != j) CHECK((d.q(k, i) - d.q(k, j)) * (d.q(k, i) + d.q(k, j) - d.u[k]) == Scalar(0));
        }
    }
  }

  TEST_CASE("classification of the named examples") {
    const auto reg = classify_commutative_a(regular({1, 4, 9}, Scalar::fraction(1, 2)));
    CHECK(reg.tag == CommutativeTag::regular);
    REQUIRE(reg.tau);
    CHECK(*reg.tau == Scalar::fraction(1, 2));

    const auto comm = commutative_example(3);
    CHECK(classify_commutative_a(comm).tag == CommutativeTag::commutative);
    const auto bc = commutative_a_structure(comm).b_algebra;
    CHECK(center_dimension(bc) == bc.dim());
    CHECK(is_semisimple(bc));

    const auto m2 = mat2_example(Scalar::fraction(2, 3), -1, 5);
    CHECK(classify_commutative_a(m2).tag == CommutativeTag::mat2);
    const auto bm = commutative_a_structure(m2).b_algebra;
    CHECK(bm.dim() == 4);
    CHECK(is_semisimple(bm));
    CHECK(center_dimension(bm) == 1);
  }

  TEST_CASE("single u-class") {
    // u = 1, tau = 2: q takes the values -2 and 3; classes {0, 1} and {2}.
    const Scalar m2 = -2, p3 = 3, v = 6;
    const auto d = make({1, 1, 1}, {v, v, v}, {{0, m2, m2}, {m2, 0, m2}, {p3, p3, 0}});
    REQUIRE(oracle_valid(d));
    const auto c = classify_commutative_a(d);
    CHECK(c.tag == CommutativeTag::single_class);
    CHECK(c.class_count == 1);
    CHECK(c.strict_class[0] == c.strict_class[1]);
    CHECK(c.strict_class[0] != c.strict_class[2]);
    REQUIRE(c.tau);
    CHECK((*c.tau == Scalar(2) || *c.tau == Scalar(-3)));
  }

  TEST_CASE("two u-classes") {
    // u = (1, 1, 4) and tau = -u_3 / 2 = -2, so v = tau^2 + u tau = (2, 2, -4).
    const auto d = make({1, 1, 4}, {2, 2, -4}, {{0, 2, -1}, {-1, 0, -1}, {2, 2, 0}});
    REQUIRE(oracle_valid(d));
    const auto c = classify_commutative_a(d);
    CHECK(c.tag == CommutativeTag::two_classes);
    REQUIRE(c.tau);
    CHECK(*c.tau == Scalar(-2));
  }

  TEST_CASE("three or more u-classes with four generators are regular") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 50; ++trial) {
      const auto d = sample_three_class(rng);
      CHECK(oracle_regular(d));
      CHECK(classify_commutative_a(d).tag == CommutativeTag::regular);
    }
  }

  TEST_CASE("tags print") {
    CHECK(to_string(CommutativeTag::mat2) == "Mat2");
    CHECK(to_string(CommutativeTag::two_classes) == "two-class");
  }
}
