#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "compat/dynkin.hpp"
#include "dynkin_golden.hpp"
#include "support.hpp"

using namespace compat;
using testing::golden_table;

TEST_SUITE("dynkin") {
  TEST_CASE("golden table doubles correctly") {
    // Sanity of the table itself: sum_j a_ij n_j = 2 m_i and sum_i a_ij m_i = 2 n_j.
    for (const auto& g : golden_table()) {
      for (std::size_t i = 0; i < g.a.size(); ++i) {
        long acc = 0;
        for (std::size_t j = 0; j < g.n.size(); ++j) acc += g.a[i][j] * g.n[j];
        CHECK(acc == 2 * g.m[i]);
      }
      for (std::size_t j = 0; j < g.n.size(); ++j) {
        long acc = 0;
        for (std::size_t i = 0; i < g.a.size(); ++i) acc += g.a[i][j] * g.m[i];
        CHECK(acc == 2 * g.n[j]);
      }
    }
  }

  TEST_CASE("catalog matches the table") {
    for (const auto& g : golden_table()) {
      CAPTURE(diagram_name({g.family, g.k, false}));
      const auto entry = catalog(g.family, g.k);
      CHECK(entry.matrix.to_rows() == g.a);
      CHECK(is_admissible(entry.matrix));
      const auto sol = solve_adm(entry.matrix);
      REQUIRE(sol);
      CHECK(sol->n == g.n);
      CHECK(sol->m == g.m);
      CHECK(entry.dims == *sol);
      const Matrix gram = gram_matrix(entry.matrix);
      CHECK(is_positive_semidefinite(gram));
      CHECK(rank(gram) == gram.rows() - 1);
    }
    CHECK_THROWS(catalog(DynkinFamily::a_odd, 1));
    CHECK_THROWS(catalog(DynkinFamily::d_even, 2));
  }

  TEST_CASE("classification survives permutation and transposition") {
    std::mt19937_64 rng(61);
    for (const auto& g : golden_table()) {
      const auto base = MultiplicityMatrix::from_rows(g.a);
      for (int trial = 0; trial < 4; ++trial) {
        std::vector<std::size_t> rows(base.rows()), cols(base.cols());
        std::iota(rows.begin(), rows.end(), 0);
        std::iota(cols.begin(), cols.end(), 0);
        std::shuffle(rows.begin(), rows.end(), rng);
        std::shuffle(cols.begin(), cols.end(), rng);
        const bool flip = trial % 2 == 1;
        auto input = base.permuted(rows, cols);
        std::vector<long> m(rows.size()), n(cols.size());
        for (std::size_t i = 0; i < rows.size(); ++i) m[i] = g.m[rows[i]];
        for (std::size_t j = 0; j < cols.size(); ++j) n[j] = g.n[cols[j]];
        if (flip) {
          input = input.transpose();
          std::swap(m, n);
        }
        const auto c = classify(input);
        REQUIRE(c);
        CHECK(c->id.family == g.family);
        CHECK(c->id.k == g.k);
        CHECK(c->dims.m == m);
        CHECK(c->dims.n == n);
        // The reported orientation reproduces the input up to permutations.
        const auto entry = catalog(c->id.family, c->id.k);
        const auto oriented = c->id.transposed ? entry.matrix.transpose() : entry.matrix;
        CHECK(oriented.rows() == input.rows());
        CHECK(oriented.cols() == input.cols());
      }
    }
  }

  TEST_CASE("matrices outside the list") {
    const auto three = MultiplicityMatrix::from_rows({{3}});
    CHECK_FALSE(is_admissible(three));
    CHECK_FALSE(is_positive_semidefinite(gram_matrix(three)));
    CHECK_FALSE(solve_adm(MultiplicityMatrix::from_rows({{1}})).has_value());
    CHECK_FALSE(solve_adm(MultiplicityMatrix::from_rows({{1, 2}})).has_value());
    const auto split = MultiplicityMatrix::from_rows({{2, 0}, {0, 2}});
    const auto dec = is_decomposable(split);
    CHECK(dec.decomposable);
    CHECK(dec.rows == std::vector<std::size_t>{0});
    CHECK(dec.cols == std::vector<std::size_t>{0});
    CHECK_FALSE(is_admissible(split));
    CHECK_FALSE(classify(split).has_value());
    CHECK_THROWS(MultiplicityMatrix::from_rows({{1, 2}, {1}}));
    CHECK_THROWS(MultiplicityMatrix::from_rows({{-1}}));
  }

  TEST_CASE("gram matrix") {
    const Matrix g = gram_matrix(MultiplicityMatrix::from_rows({{2}}));
    CHECK(g == Matrix::from_rows({{2, -2}, {-2, 2}}));
    CHECK(is_positive_semidefinite(g));
    CHECK_FALSE(is_positive_semidefinite(Matrix::from_rows({{1, 2}, {2, 1}})));
  }

  TEST_CASE("names and tags") {
    CHECK(diagram_name({DynkinFamily::a_odd, 3, false}) == "A~5");
    CHECK(diagram_name({DynkinFamily::d_even, 4, false}) == "D~8");
    CHECK(diagram_name({DynkinFamily::d_odd, 3, false}) == "D~5");
    for (auto f : {DynkinFamily::a1, DynkinFamily::a_odd, DynkinFamily::d4, DynkinFamily::d_even, DynkinFamily::d_odd,
                   DynkinFamily::e6, DynkinFamily::e7, DynkinFamily::e8})
      CHECK(parse_family(family_tag(f)) == f);
    CHECK_THROWS_AS(parse_family("F4"), std::invalid_argument);
  }
}
