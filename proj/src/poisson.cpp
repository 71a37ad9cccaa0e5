#include "compat/poisson.hpp"

#include <stdexcept>

#include "sparse_table.hpp"

namespace compat {

LinearPoissonBracket build_bracket(const StructureConstants& sc, std::size_t n) {
  const std::size_t N = sc.dim(), d = N * n * n;
  auto f = [&](std::size_t i, std::size_t l, std::size_t m) { return (i * n + l) * n + m; };
  LinearPoissonBracket b{StructureConstants(d, "bracket")};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      for (std::size_t k = 0; k < N; ++k) {
        const Scalar& pij = sc.at(i, j, k);
        const Scalar& pji = sc.at(j, i, k);
        if (pij.is_zero() && pji.is_zero()) continue;
        for (std::size_t l1 = 0; l1 < n; ++l1)
          for (std::size_t m1 = 0; m1 < n; ++m1)
            for (std::size_t l2 = 0; l2 < n; ++l2)
              for (std::size_t m2 = 0; m2 < n; ++m2) {
                Scalar& out1 = b.gamma.at(f(i, l1, m1), f(j, l2, m2), f(k, l1, m2));
                if (m1 == l2) out1 += pij;
                Scalar& out2 = b.gamma.at(f(i, l1, m1), f(j, l2, m2), f(k, l2, m1));
                if (m2 == l1) out2 -= pji;
              }
      }
  return b;
}

namespace {

void require_small(std::size_t d) {
  if (d > kMaxBracketDim)
    throw std::invalid_argument("bracket has " + std::to_string(d) + " coordinates, the limit is " +
                                std::to_string(kMaxBracketDim));
}

// sum_d x(a,b,d) y(d,c,e) + cyclic in (a, b, c), added into acc.
void add_jacobi(detail::Accumulator& acc, const detail::SparseTable& x, const detail::SparseTable& y,
                std::size_t a, std::size_t b, std::size_t c) {
  x.add_left(acc, y, a, b, c, 1);
  x.add_left(acc, y, b, c, a, 1);
  x.add_left(acc, y, c, a, b, 1);
}

}  // namespace

Residual jacobi_residual(const LinearPoissonBracket& br) {
  const std::size_t d = br.dim();
  require_small(d);
  detail::SparseTable g(br.gamma);
  detail::Accumulator acc(d);
  Residual res;
  res.identity = "Jacobi";
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        acc.clear();
        add_jacobi(acc, g, g, a, b, c);
        res.absorb(acc.values(), {a, b, c});
      }
  return res;
}

Residual poisson_compatibility(const LinearPoissonBracket& b1, const LinearPoissonBracket& b2) {
  if (b1.dim() != b2.dim()) throw std::invalid_argument("brackets on different coordinate spaces");
  const std::size_t d = b1.dim();
  require_small(d);
  detail::SparseTable g1(b1.gamma), g2(b2.gamma);
  detail::Accumulator acc(d);
  Residual res;
  res.identity = "mixed Jacobi";
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      for (std::size_t c = 0; c < d; ++c) {
        acc.clear();
        add_jacobi(acc, g1, g2, a, b, c);
        add_jacobi(acc, g2, g1, a, b, c);
        res.absorb(acc.values(), {a, b, c});
      }
  return res;
}

}  // namespace compat
