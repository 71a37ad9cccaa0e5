#include "compat/pmstructure.hpp"

#include <stdexcept>

namespace compat {

std::vector<std::size_t> block_offsets(const std::vector<std::size_t>& dims) {
  std::vector<std::size_t> off(dims.size() + 1, 0);
  for (std::size_t x = 0; x < dims.size(); ++x) off[x + 1] = off[x] + dims[x] * dims[x];
  return off;
}

StructureConstants block_matrix_algebra(const std::vector<std::size_t>& dims) {
  StructureConstants sc;
  bool first = true;
  for (auto n : dims) {
    sc = first ? matrix_algebra(n) : direct_sum(sc, matrix_algebra(n));
    first = false;
  }
  sc.set_label("block matrix algebra");
  return sc;
}

namespace {

void require_shape(const PMPresentation& pres, const PMRepresentation& rep) {
  const std::size_t m = pres.blocks();
  if (rep.blocks() != m || rep.a.size() != m || rep.b.size() != m || rep.c.size() != m)
    throw std::invalid_argument("representation has the wrong number of blocks");
  for (std::size_t x = 0; x < m; ++x) {
    if (rep.c[x].rows() != rep.dims[x] || rep.c[x].cols() != rep.dims[x])
      throw std::invalid_argument("C image has the wrong size in block " + std::to_string(x + 1));
    for (std::size_t y = 0; y < m; ++y) {
      if (rep.a[x].size() != m || rep.b[x].size() != m || rep.a[x][y].size() != pres.count(x, y) ||
          rep.b[x][y].size() != pres.count(y, x))
        throw std::invalid_argument("generator count mismatch in block (" + std::to_string(x + 1) + "," +
                                    std::to_string(y + 1) + ")");
      for (const auto* mats : {&rep.a[x][y], &rep.b[x][y]})
        for (const auto& g : *mats)
          if (g.rows() != rep.dims[x] || g.cols() != rep.dims[y])
            throw std::invalid_argument("generator image has the wrong shape");
    }
  }
}

void add_block(Vector& v, const Matrix& m, const std::vector<std::size_t>& off, std::size_t x) {
  auto flat = m.data();
  for (std::size_t k = 0; k < flat.size(); ++k) v[off[x] + k] += flat[k];
}

// Locates basis vector g of the block matrix algebra.
struct BlockEntry {
  std::size_t block, row, col;
};
BlockEntry locate(std::size_t g, const std::vector<std::size_t>& dims, const std::vector<std::size_t>& off) {
  std::size_t x = 0;
  while (g >= off[x + 1]) ++x;
  const std::size_t r = g - off[x];
  return {x, r / dims[x], r % dims[x]};
}

}  // namespace

IdentityReport pm_validate_representation(const PMPresentation& input, const PMRepresentation& rep) {
  require_shape(input, rep);
  const PMPresentation pres = input.has_c_actions() ? input : with_centrality_actions(input);
  const std::size_t m = pres.blocks();
  auto one = [&](std::size_t x) { return Matrix::identity(rep.dims[x]); };

  Residual aa, bb, ba, ca, bc;
  aa.identity = "A products";
  bb.identity = "B products";
  ba.identity = "BA relation";
  ca.identity = "C right action";
  bc.identity = "C left action";
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (std::size_t z = 0; z < m; ++z) {
        for (std::size_t i = 0; i < pres.count(x, y); ++i)
          for (std::size_t j = 0; j < pres.count(y, z); ++j) {
            Matrix r = rep.a[x][y][i] * rep.a[y][z][j];
            for (std::size_t k = 0; k < pres.count(x, z); ++k) r -= rep.a[x][z][k] * pres.phi(x, y, z, i, j, k);
            if (x == z) r -= one(x) * pres.mu(x, y, i, j);
            aa.absorb(r.data(), {x, y, z, i, j});
          }
        for (std::size_t i = 0; i < pres.count(y, x); ++i)
          for (std::size_t j = 0; j < pres.count(z, y); ++j) {
            Matrix r = rep.b[x][y][i] * rep.b[y][z][j];
            for (std::size_t k = 0; k < pres.count(z, x); ++k) r -= rep.b[x][z][k] * pres.psi(x, y, z, i, j, k);
            if (x == z) r -= one(x) * pres.lambda(x, y, i, j);
            bb.absorb(r.data(), {x, y, z, i, j});
          }
        for (std::size_t i = 0; i < pres.count(y, x); ++i)
          for (std::size_t j = 0; j < pres.count(y, z); ++j) {
            Matrix r = rep.b[x][y][i] * rep.a[y][z][j];
            for (std::size_t k = 0; k < pres.count(z, x); ++k) r -= rep.b[x][z][k] * pres.phi(y, z, x, j, k, i);
            for (std::size_t k = 0; k < pres.count(x, z); ++k) r -= rep.a[x][z][k] * pres.psi(z, x, y, k, i, j);
            if (x == z) {
              r -= one(x) * pres.t(x, y, i, j);
              if (i == j) r -= rep.c[x];
            }
            ba.absorb(r.data(), {x, y, z, i, j});
          }
      }
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t j = 0; j < pres.count(x, y); ++j) {
        Matrix r = rep.c[x] * rep.a[x][y][j];
        for (std::size_t k = 0; k < pres.count(y, x); ++k) r -= rep.b[x][y][k] * pres.mu(x, y, j, k);
        for (std::size_t l = 0; l < pres.count(x, y); ++l) r -= rep.a[x][y][l] * pres.act_a(x, y, j, l);
        if (x == y) r -= one(x) * pres.unit_a(x, j);
        ca.absorb(r.data(), {x, y, j});
      }
      for (std::size_t j = 0; j < pres.count(y, x); ++j) {
        Matrix r = rep.b[x][y][j] * rep.c[y];
        for (std::size_t k = 0; k < pres.count(x, y); ++k) r -= rep.a[x][y][k] * pres.lambda(y, x, k, j);
        for (std::size_t l = 0; l < pres.count(y, x); ++l) r -= rep.b[x][y][l] * pres.act_b(x, y, j, l);
        if (x == y) r -= one(x) * pres.unit_b(x, j);
        bc.absorb(r.data(), {x, y, j});
      }
    }

  IdentityReport report{{aa, bb, ba, ca, bc}};
  Residual na, nb;
  na.identity = "A non-degeneracy";
  nb.identity = "B non-degeneracy";
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      auto ia = check_independence(rep.a[x][y], x == y);
      if (!ia.independent) na.absorb(ia.witness, {x, y});
      auto ib = check_independence(rep.b[x][y], x == y);
      if (!ib.independent) nb.absorb(ib.witness, {x, y});
    }
  report.families.push_back(na);
  report.families.push_back(nb);
  CompatibilityReport comp = check_compatibility({block_matrix_algebra(rep.dims), pm_second_product(rep)});
  comp.circle.identity = "second product associativity";
  comp.mixed.identity = "compatibility with the matrix product";
  report.families.push_back(comp.circle);
  report.families.push_back(comp.mixed);
  return report;
}

LinearOperator pm_r_operator(const PMRepresentation& rep) {
  const auto off = block_offsets(rep.dims);
  const std::size_t d = off.back(), m = rep.blocks();
  LinearOperator r(d, d);
  for (std::size_t g = 0; g < d; ++g) {
    const BlockEntry e = locate(g, rep.dims, off);
    const Matrix x = Matrix::unit(rep.dims[e.block], e.row, e.col);
    Vector col(d);
    for (std::size_t y = 0; y < m; ++y) {
      Matrix img(rep.dims[y], rep.dims[y]);
      for (std::size_t i = 0; i < rep.a[y][e.block].size(); ++i)
        img += rep.a[y][e.block][i] * x * rep.b[e.block][y][i];
      if (y == e.block) img += rep.c[y] * x;
      add_block(col, img, off, y);
    }
    for (std::size_t k = 0; k < d; ++k) r(k, g) = col[k];
  }
  return r;
}

StructureConstants pm_second_product(const PMRepresentation& rep) {
  const auto off = block_offsets(rep.dims);
  const std::size_t d = off.back(), m = rep.blocks();
  StructureConstants sc(d, "second product");
  for (std::size_t g = 0; g < d; ++g) {
    const BlockEntry ex = locate(g, rep.dims, off);
    const std::size_t bx = ex.block;
    const Matrix x = Matrix::unit(rep.dims[bx], ex.row, ex.col);
    for (std::size_t h = 0; h < d; ++h) {
      const BlockEntry ey = locate(h, rep.dims, off);
      const std::size_t by = ey.block;
      const Matrix y = Matrix::unit(rep.dims[by], ey.row, ey.col);
      Vector out(d);
      if (bx != by) {
        Matrix in_y(rep.dims[by], rep.dims[by]), in_x(rep.dims[bx], rep.dims[bx]);
        for (std::size_t i = 0; i < rep.a[by][bx].size(); ++i) in_y += rep.a[by][bx][i] * x * rep.b[bx][by][i] * y;
        for (std::size_t i = 0; i < rep.a[bx][by].size(); ++i) in_x += x * rep.a[bx][by][i] * y * rep.b[by][bx][i];
        add_block(out, in_y, off, by);
        add_block(out, in_x, off, bx);
      } else {
        const Matrix xy = x * y;
        Matrix same = x * rep.c[bx] * y;
        const auto& as = rep.a[bx][bx];
        const auto& bs = rep.b[bx][bx];
        for (std::size_t i = 0; i < as.size(); ++i)
          same += as[i] * x * bs[i] * y + x * as[i] * y * bs[i] - as[i] * xy * bs[i];
        add_block(out, same, off, bx);
        for (std::size_t v = 0; v < m; ++v) {
          if (v == bx) continue;
          Matrix spill(rep.dims[v], rep.dims[v]);
          for (std::size_t i = 0; i < rep.a[v][bx].size(); ++i) spill -= rep.a[v][bx][i] * xy * rep.b[bx][v][i];
          add_block(out, spill, off, v);
        }
      }
      for (std::size_t k = 0; k < d; ++k) sc.at(g, h, k) = out[k];
    }
  }
  return sc;
}

namespace {

std::vector<std::vector<std::size_t>> off_diagonal_counts(std::size_t m, std::size_t between, std::size_t inside) {
  std::vector<std::vector<std::size_t>> counts(m, std::vector<std::size_t>(m, between));
  for (std::size_t x = 0; x < m; ++x) counts[x][x] = inside;
  return counts;
}

Scalar invert(const Scalar& s, const char* what) {
  auto inv = s.try_inverse();
  if (!inv) throw std::invalid_argument(what);
  return *inv;
}

void require_rational_data(std::span<const Scalar> u, std::span<const Scalar> t) {
  if (u.size() != t.size()) throw std::invalid_argument("u and t differ in length");
  for (std::size_t x = 0; x < u.size(); ++x) {
    if (t[x].is_zero()) throw std::invalid_argument("t_" + std::to_string(x + 1) + " vanishes");
    for (std::size_t y = 0; y < x; ++y)
      if (u[x] == u[y])
        throw std::invalid_argument("u_" + std::to_string(y + 1) + " = u_" + std::to_string(x + 1));
  }
}

// Coefficient of e_x in K_x beyond t_x C_x, with its sign reversed.
Vector rational_shift(std::span<const Scalar> u, std::span<const Scalar> t) {
  Vector s(u.size());
  for (std::size_t x = 0; x < u.size(); ++x)
    for (std::size_t y = 0; y < u.size(); ++y)
      if (y != x) s[x] += t[y] / (u[x] - u[y]);
  return s;
}

}  // namespace

PMPresentation rational_pmstructure(std::span<const Scalar> u, std::span<const Scalar> t) {
  require_rational_data(u, t);
  const std::size_t m = u.size();
  PMPresentation pres(off_diagonal_counts(m, 1, 0));
  const Vector s = rational_shift(u, t);
  // B[xy] here is t_x/(u_y - u_x) times the B_xy of the relations above.
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x) continue;
      pres.mu(x, y, 0, 0) = 1;
      pres.lambda(x, y, 0, 0) = -t[x] * t[y] / ((u[x] - u[y]) * (u[x] - u[y]));
      pres.t(x, y, 0, 0) = t[x] / (u[y] - u[x]) + s[x];
      for (std::size_t z = 0; z < m; ++z) {
        if (z == y || z == x) continue;
        pres.phi(x, y, z, 0, 0, 0) = 1;
        pres.psi(x, y, z, 0, 0, 0) = t[y] * (u[z] - u[x]) / ((u[y] - u[x]) * (u[z] - u[y]));
      }
    }
  pres.enable_c_actions();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x) continue;
      pres.act_a(x, y, 0, 0) = t[x] / (u[x] - u[y]) - s[x];
      pres.act_b(x, y, 0, 0) = t[y] / (u[y] - u[x]) - s[y];
    }
  return pres;
}

PMRepresentation rational_pm_representation(std::span<const Scalar> u, std::span<const Scalar> t) {
  require_rational_data(u, t);
  const std::size_t m = u.size();
  const Vector s = rational_shift(u, t);
  PMRepresentation rep;
  rep.dims.assign(m, 1);
  rep.a.assign(m, std::vector<std::vector<Matrix>>(m));
  rep.b = rep.a;
  auto scalar = [](const Scalar& v) { return Matrix::identity(1) * v; };
  for (std::size_t x = 0; x < m; ++x) {
    const Scalar inv = invert(u[x], "the one-dimensional representation needs nonzero u");
    rep.c.push_back(scalar(t[x] * inv - s[x]));
    for (std::size_t y = 0; y < m; ++y) {
      if (y == x) continue;
      rep.a[x][y].push_back(scalar(1));
      rep.b[x][y].push_back(scalar(t[x] / (u[y] - u[x]) * u[y] * inv));
    }
  }
  return rep;
}

namespace {

std::size_t wrap(long i, std::size_t k) {
  const long r = i % static_cast<long>(k);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(k) : r);
}

// Shared pieces of the cyclic family.
struct CyclicTables {
  const CyclicPMData& data;
  std::size_t k, m;
  Scalar eps;
  Vector shift;  // s_x

  explicit CyclicTables(const CyclicPMData& d) : data(d), k(d.k), m(d.blocks()), eps(d.eps()) {
    if (k == 0) throw std::invalid_argument("cyclic order must be positive");
    if (d.weights.size() != m) throw std::invalid_argument("lambda and t differ in length");
    for (std::size_t x = 0; x < m; ++x) {
      if (k > 1 && d.lambda[x].is_zero()) throw std::invalid_argument("lambda_" + std::to_string(x + 1) + " vanishes");
      for (std::size_t y = 0; y < x; ++y)
        if (d.lambda[x].pow(static_cast<long>(k)) == d.lambda[y].pow(static_cast<long>(k)))
          throw std::invalid_argument("lambda_" + std::to_string(y + 1) + "^k = lambda_" + std::to_string(x + 1) + "^k");
    }
    shift.resize(m);
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y)
        for (std::size_t i = 0; i < k; ++i) {
          if (i == 0 && y == x) continue;
          const Scalar e = e_pow(static_cast<long>(i));
          shift[x] += d.weights[y] * e / (e * d.lambda[y] - d.lambda[x]);
        }
  }
  Scalar e_pow(long i) const { return eps.pow(static_cast<long>(wrap(i, k))); }
  bool valid(std::size_t x, std::size_t y, long i) const { return x != y || wrap(i, k) != 0; }
  // B[xy][index(i)] = coef(x, y, i) B^{-i}_xy.
  Scalar coef(std::size_t x, std::size_t y, long i) const {
    return data.weights[x] / (e_pow(-i) * data.lambda[x] - data.lambda[y]);
  }
};

}  // namespace

Scalar CyclicPMData::eps() const {
  if (field.exact()) return root_of_unity(static_cast<int>(k));
  return field.root(static_cast<int>(k));
}

std::size_t CyclicPMData::index(std::size_t x, std::size_t y, long i) const {
  const std::size_t r = wrap(i, k);
  if (x == y) {
    if (r == 0) throw std::out_of_range("no generator of exponent 0 inside a block");
    return r - 1;
  }
  return r;
}

PMPresentation cyclic_pmstructure(const CyclicPMData& data) {
  const CyclicTables tab(data);
  const std::size_t k = tab.k, m = tab.m;
  for (std::size_t x = 0; x < m; ++x)
    if (data.weights[x].is_zero()) throw std::invalid_argument("t_" + std::to_string(x + 1) + " vanishes");
  PMPresentation pres(off_diagonal_counts(m, k, k - 1));
  const long lk = static_cast<long>(k);
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (long i = 0; i < lk; ++i) {
        if (!tab.valid(x, y, i)) continue;
        const std::size_t ii = data.index(x, y, i);
        for (std::size_t z = 0; z < m; ++z)
          for (long j = 0; j < lk; ++j) {
            if (!tab.valid(y, z, j)) continue;
            const std::size_t jj = data.index(y, z, j);
            const Scalar bb = tab.coef(x, y, i) * tab.coef(y, z, j);
            if (tab.valid(x, z, i + j)) {
              const std::size_t kk = data.index(x, z, i + j);
              pres.phi(x, y, z, ii, jj, kk) = 1;
              pres.psi(x, y, z, ii, jj, kk) = bb / tab.coef(x, z, i + j);
            } else {
              pres.mu(x, y, ii, jj) = 1;
              pres.lambda(x, y, ii, jj) = bb;
            }
          }
        // B[xy] pairs with A[yx] of the same exponent.
        pres.t(x, y, ii, ii) = tab.coef(x, y, i) * tab.e_pow(-i) + tab.shift[x];
      }
  pres.enable_c_actions();
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y)
      for (long j = 0; j < lk; ++j) {
        if (!tab.valid(x, y, j)) continue;
        const std::size_t jj = data.index(x, y, j);
        pres.act_a(x, y, jj, jj) =
            data.weights[x] / (tab.e_pow(-j) * data.lambda[y] - data.lambda[x]) - tab.shift[x];
        pres.act_b(x, y, jj, jj) =
            data.weights[y] / (tab.e_pow(-j) * data.lambda[x] - data.lambda[y]) - tab.shift[y];
      }
  return pres;
}

namespace {

struct CyclicOperators {
  Matrix a, d;
  std::vector<Matrix> a_pow;
  std::vector<Matrix> resolvent;  // (d - lambda_x)^{-1}
};

CyclicOperators cyclic_operators(const CyclicTables& tab, const Scalar& s) {
  const std::size_t k = tab.k;
  CyclicOperators op{Matrix(k, k), Matrix(k, k), {}, {}};
  for (std::size_t r = 0; r < k; ++r) {
    op.a((r + k - 1) % k, r) = 1;
    op.d(r, r) = s * tab.eps.pow(static_cast<long>(r));
  }
  op.a_pow.push_back(Matrix::identity(k));
  for (std::size_t r = 1; r < k; ++r) op.a_pow.push_back(op.a_pow.back() * op.a);
  for (std::size_t x = 0; x < tab.m; ++x) {
    auto inv = inverse(op.d - Matrix::identity(k) * tab.data.lambda[x]);
    if (!inv) throw std::invalid_argument("d - lambda_" + std::to_string(x + 1) + " is singular");
    op.resolvent.push_back(*inv);
  }
  return op;
}

// Image of B^i_xy: (eps^i d - lambda_y)(d - lambda_x)^{-1} a^i.
Matrix cyclic_b(const CyclicTables& tab, const CyclicOperators& op, std::size_t x, std::size_t y, long i) {
  const Matrix one = Matrix::identity(tab.k);
  return (op.d * tab.e_pow(i) - one * tab.data.lambda[y]) * op.resolvent[x] * op.a_pow[wrap(i, tab.k)];
}

}  // namespace

PMRepresentation cyclic_pm_representation(const CyclicPMData& data, const Scalar& s) {
  const CyclicTables tab(data);
  const CyclicOperators op = cyclic_operators(tab, s);
  const std::size_t k = tab.k, m = tab.m;
  const long lk = static_cast<long>(k);
  PMRepresentation rep;
  rep.dims.assign(m, k);
  rep.a.assign(m, std::vector<std::vector<Matrix>>(m));
  rep.b = rep.a;
  for (std::size_t x = 0; x < m; ++x) {
    rep.c.push_back(op.resolvent[x] * data.weights[x] - Matrix::identity(k) * tab.shift[x]);
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t count = x == y ? k - 1 : k;
      rep.a[x][y].resize(count);
      rep.b[x][y].resize(count);
      for (long i = 0; i < lk; ++i) {
        if (!tab.valid(x, y, i)) continue;
        rep.a[x][y][data.index(x, y, i)] = op.a_pow[wrap(i, k)];
        rep.b[x][y][data.index(x, y, i)] = cyclic_b(tab, op, x, y, -i) * tab.coef(x, y, i);
      }
    }
  }
  return rep;
}

LinearOperator cyclic_pm_r_operator(const CyclicPMData& data, const Scalar& s) {
  const CyclicTables tab(data);
  const CyclicOperators op = cyclic_operators(tab, s);
  const std::size_t k = tab.k, m = tab.m;
  const std::vector<std::size_t> dims(m, k);
  const auto off = block_offsets(dims);
  const std::size_t d = off.back();
  LinearOperator r(d, d);
  for (std::size_t g = 0; g < d; ++g) {
    const BlockEntry e = locate(g, dims, off);
    const std::size_t x = e.block;
    const Matrix v = Matrix::unit(k, e.row, e.col);
    Vector col(d);
    for (std::size_t y = 0; y < m; ++y) {
      Matrix img = y == x ? op.resolvent[x] * v * data.weights[x] - v * tab.shift[x] : Matrix(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        const long li = static_cast<long>(i);
        if (!tab.valid(x, y, li)) continue;
        const Scalar w = data.weights[x] / (tab.e_pow(li) * data.lambda[x] - data.lambda[y]);
        img += op.a_pow[wrap(-li, k)] * v * cyclic_b(tab, op, x, y, li) * w;
      }
      add_block(col, img, off, y);
    }
    for (std::size_t q = 0; q < d; ++q) r(q, g) = col[q];
  }
  return r;
}

PMPresentation pm_direct_sum(const PMPresentation& x0, const PMPresentation& y0) {
  const bool actions = x0.has_c_actions() || y0.has_c_actions();
  const PMPresentation x = actions && !x0.has_c_actions() ? with_centrality_actions(x0) : x0;
  const PMPresentation y = actions && !y0.has_c_actions() ? with_centrality_actions(y0) : y0;
  const std::size_t mx = x.blocks(), m = mx + y.blocks();
  std::vector<std::vector<std::size_t>> counts(m, std::vector<std::size_t>(m, 0));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      if (a < mx && b < mx) counts[a][b] = x.count(a, b);
      if (a >= mx && b >= mx) counts[a][b] = y.count(a - mx, b - mx);
    }
  PMPresentation out(counts);
  if (actions) out.enable_c_actions();
  for (const auto* part : {&x, &y}) {
    const std::size_t base = part == &x ? 0 : mx;
    const PMPresentation& p = *part;
    const std::size_t n = p.blocks();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const std::size_t ab = p.count(a, b), ba = p.count(b, a);
        for (std::size_t i = 0; i < std::max(ab, ba); ++i)
          for (std::size_t j = 0; j < std::max(ab, ba); ++j) {
            out.mu(base + a, base + b, i, j) = p.mu(a, b, i, j);
            out.lambda(base + a, base + b, i, j) = p.lambda(a, b, i, j);
            out.t(base + a, base + b, i, j) = p.t(a, b, i, j);
            if (actions) {
              out.act_a(base + a, base + b, i, j) = p.act_a(a, b, i, j);
              out.act_b(base + a, base + b, i, j) = p.act_b(a, b, i, j);
            }
          }
        if (actions && a == b)
          for (std::size_t j = 0; j < ab; ++j) {
            out.unit_a(base + a, j) = p.unit_a(a, j);
            out.unit_b(base + a, j) = p.unit_b(a, j);
          }
        for (std::size_t c = 0; c < n; ++c) {
          std::size_t w = 0;
          for (auto cnt : {p.count(a, b), p.count(b, c), p.count(a, c), p.count(b, a), p.count(c, b), p.count(c, a)})
            w = std::max(w, cnt);
          for (std::size_t i = 0; i < w; ++i)
            for (std::size_t j = 0; j < w; ++j)
              for (std::size_t k = 0; k < w; ++k) {
                out.phi(base + a, base + b, base + c, i, j, k) = p.phi(a, b, c, i, j, k);
                out.psi(base + a, base + b, base + c, i, j, k) = p.psi(a, b, c, i, j, k);
              }
        }
      }
  }
  return out;
}

PMPresentation pm_opposite(const PMPresentation& pres) {
  // A'[ab] = B[ba] and B'[ba] = A[ab] with the products reversed; K is unchanged.
  const std::size_t m = pres.blocks();
  std::size_t w = 0;
  for (const auto& row : pres.counts())
    for (auto c : row) w = std::max(w, c);
  PMPresentation out(pres.counts());
  if (pres.has_c_actions()) out.enable_c_actions();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t j = 0; j < w; ++j) {
          out.mu(a, b, i, j) = pres.lambda(a, b, j, i);
          out.lambda(a, b, i, j) = pres.mu(a, b, j, i);
          out.t(a, b, i, j) = pres.t(a, b, j, i);
          if (pres.has_c_actions()) {
            out.act_a(a, b, i, j) = pres.act_b(b, a, i, j);
            out.act_b(a, b, i, j) = pres.act_a(b, a, i, j);
          }
          for (std::size_t c = 0; c < m; ++c)
            for (std::size_t k = 0; k < w; ++k) {
              out.phi(a, b, c, i, j, k) = pres.psi(c, b, a, j, i, k);
              out.psi(a, b, c, i, j, k) = pres.phi(c, b, a, j, i, k);
            }
        }
      if (pres.has_c_actions() && a == b)
        for (std::size_t j = 0; j < w; ++j) {
          out.unit_a(a, j) = pres.unit_b(a, j);
          out.unit_b(a, j) = pres.unit_a(a, j);
        }
    }
  return out;
}

BlockDimensions pm_block_dimensions(const PMPresentation& pres) {
  const std::size_t m = pres.blocks();
  BlockDimensions dims;
  dims.a.assign(m, std::vector<std::size_t>(m));
  dims.b = dims.l = dims.a;
  for (std::size_t x = 0; x < m; ++x)
    for (std::size_t y = 0; y < m; ++y) {
      const std::size_t unit = x == y ? 1 : 0;
      dims.a[x][y] = pres.count(x, y) + unit;
      dims.b[x][y] = pres.count(y, x) + unit;
      // e_x and C_x on the diagonal.
      dims.l[x][y] = pres.count(x, y) + pres.count(y, x) + 2 * unit;
    }
  return dims;
}

}  // namespace compat
