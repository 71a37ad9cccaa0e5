#include "compat/matrix_ops.hpp"

#include <stdexcept>
#include <string>

namespace compat {

namespace {

void require_sizes(const RPresentation& pres) {
  if (pres.a.size() != pres.b.size()) throw std::invalid_argument("presentation has unequal a and b lists");
  auto ok = [&](const Matrix& m) { return m.rows() == pres.n && m.cols() == pres.n; };
  for (std::size_t i = 0; i < pres.a.size(); ++i)
    if (!ok(pres.a[i]) || !ok(pres.b[i])) throw std::invalid_argument("presentation matrix has wrong size");
  if (!ok(pres.c)) throw std::invalid_argument("presentation c has wrong size");
}

std::string label(const char* what, std::size_t i, std::size_t j) {
  return std::string(what) + " (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// Coordinates of `target` in the basis {m_0, ..., m_{p-1}, 1}.
std::optional<Vector> span_coordinates(const std::vector<Matrix>& mats, const Matrix& target) {
  const std::size_t n = target.rows();
  std::vector<Vector> cols;
  for (const auto& m : mats) cols.push_back(m.flatten());
  cols.push_back(Matrix::identity(n).flatten());
  return solve(columns(cols, n * n), target.flatten());
}

}  // namespace

MTensors MTensors::zero(std::size_t p) {
  return {p, Tensor3::uniform(p), Tensor3::uniform(p), Tensor2::uniform(p), Tensor2::uniform(p),
          Tensor2::uniform(p)};
}

Matrix r_apply(const RPresentation& pres, const Matrix& x) {
  require_sizes(pres);
  if (x.rows() != pres.n || x.cols() != pres.n) throw std::invalid_argument("argument has wrong size");
  Matrix out = pres.c * x;
  for (std::size_t i = 0; i < pres.length(); ++i) out += pres.a[i] * x * pres.b[i];
  return out;
}

LinearOperator r_operator(const RPresentation& pres) {
  const std::size_t n = pres.n, d = n * n;
  LinearOperator r(d, d);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      Vector img = r_apply(pres, Matrix::unit(n, k, l)).flatten();
      for (std::size_t row = 0; row < d; ++row) r(row, k * n + l) = img[row];
    }
  return r;
}

StructureConstants second_product(const RPresentation& pres) {
  require_sizes(pres);
  const std::size_t n = pres.n, d = n * n;
  StructureConstants sc(d, "second product");
  for (std::size_t e1 = 0; e1 < d; ++e1) {
    const Matrix x = Matrix::unit(n, e1 / n, e1 % n);
    for (std::size_t e2 = 0; e2 < d; ++e2) {
      const Matrix y = Matrix::unit(n, e2 / n, e2 % n);
      const Matrix xy = x * y;
      Matrix out = x * pres.c * y;
      for (std::size_t i = 0; i < pres.length(); ++i) {
        const Matrix& a = pres.a[i];
        const Matrix& b = pres.b[i];
        out += a * x * b * y;
        out += x * a * y * b;
        out -= a * xy * b;
      }
      for (std::size_t k = 0; k < d; ++k) sc.at(e1, e2, k) = out.data()[k];
    }
  }
  return sc;
}

IndependenceReport check_independence(const std::vector<Matrix>& mats, bool include_unity) {
  if (mats.empty() && !include_unity) return {};
  const std::size_t n = mats.empty() ? 0 : mats.front().rows();
  std::vector<Vector> cols;
  if (include_unity) {
    if (mats.empty()) return {};
    cols.push_back(Matrix::identity(n).flatten());
  }
  for (const auto& m : mats) cols.push_back(m.flatten());
  auto kernel = nullspace(columns(cols, n * n));
  if (kernel.empty()) return {};
  return {false, kernel.front()};
}

RPresentation minimize_presentation(const LinearOperator& r, std::size_t n) {
  const std::size_t d = n * n;
  if (r.rows() != d || r.cols() != d) throw std::invalid_argument("operator does not act on Mat_n");
  // middle(i*n+k, l*n+j) = coefficient of x_kl in R(x)_ij, so that
  // R = sum_t a_t x b_t  <=>  middle = sum_t vec(a_t) vec(b_t)^T.
  Matrix middle(d, d);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) middle(i * n + k, l * n + j) = r(i * n + j, k * n + l);

  // P removes the trace part: P v = v - tr(v)/n * 1.
  const Scalar inv_n = Scalar(mpq_class(1, static_cast<long>(n)));
  Matrix tr_row(1, d), unit_col(d, 1);
  for (std::size_t i = 0; i < n; ++i) {
    tr_row(0, i * n + i) = 1;
    unit_col(i * n + i, 0) = 1;
  }
  Matrix proj = Matrix::identity(d) - unit_col * tr_row * inv_n;

  Matrix core = proj * middle * proj.transpose();
  Matrix left_part = proj * middle * tr_row.transpose() * inv_n;
  Matrix right_part = proj * middle.transpose() * tr_row.transpose() * inv_n;
  Scalar scalar_part = (tr_row * middle * tr_row.transpose())(0, 0) * inv_n * inv_n;

  RPresentation out;
  out.n = n;
  // x -> x u equals x -> u x up to an inner derivation, so both fold into c.
  out.c = Matrix::unflatten((left_part + right_part).data(), n, n) + Matrix::identity(n) * scalar_part;

  Echelon e = row_reduce(core);
  for (std::size_t t = 0; t < e.pivots.size(); ++t) {
    Vector a(d), b(d);
    for (std::size_t row = 0; row < d; ++row) a[row] = core(row, e.pivots[t]);
    for (std::size_t col = 0; col < d; ++col) b[col] = e.reduced(t, col);
    out.a.push_back(Matrix::unflatten(a, n, n));
    out.b.push_back(Matrix::unflatten(b, n, n));
  }
  return out;
}

MExtraction extract_m_tensors(const RPresentation& input) {
  require_sizes(input);
  MExtraction ex;
  ex.presentation = input;
  if (!check_independence(input.a, true).independent || !check_independence(input.b, true).independent) {
    ex.presentation = minimize_presentation(r_operator(input), input.n);
    ex.minimized = true;
  }
  const RPresentation& pres = ex.presentation;
  const std::size_t p = pres.length(), n = pres.n;
  const Matrix one = Matrix::identity(n);
  MTensors& t = ex.tensors;
  t = MTensors::zero(p);

  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      auto ca = span_coordinates(pres.a, pres.a[i] * pres.a[j]);
      if (!ca) throw std::domain_error("not an M-structure representation: " + label("a_i a_j", i, j) + " leaves span{1, a}");
      auto cb = span_coordinates(pres.b, pres.b[i] * pres.b[j]);
      if (!cb) throw std::domain_error("not an M-structure representation: " + label("b^i b^j", i, j) + " leaves span{1, b}");
      for (std::size_t k = 0; k < p; ++k) {
        t.phi(i, j, k) = (*ca)[k];
        t.psi(i, j, k) = (*cb)[k];
      }
      t.mu(i, j) = (*ca)[p];
      t.lambda(i, j) = (*cb)[p];
    }

  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Matrix rest = pres.b[i] * pres.a[j];
      for (std::size_t k = 0; k < p; ++k) {
        rest -= pres.a[k] * t.psi(k, i, j);
        rest -= pres.b[k] * t.phi(j, k, i);
      }
      if (i == j) rest -= pres.c;
      Scalar scalar = rest(0, 0);
      if (!(rest - one * scalar).is_zero())
        throw std::domain_error("not an M-structure representation: " + label("b^i a_j", i, j) +
                                " differs from its span part by a non-scalar");
      t.t(i, j) = scalar;
    }

  // b^i c and c a_j as forced by associativity of the second product.
  ex.consistency.identity = "c relations";
  for (std::size_t i = 0; i < p; ++i) {
    Matrix lhs = pres.b[i] * pres.c;
    Matrix rhs(n, n);
    for (std::size_t k = 0; k < p; ++k) {
      rhs += pres.a[k] * t.lambda(k, i);
      rhs -= pres.b[k] * t.t(i, k);
      for (std::size_t l = 0; l < p; ++l) {
        for (std::size_t s = 0; s < p; ++s) rhs -= pres.b[s] * (t.phi(k, l, i) * t.psi(l, k, s));
        rhs -= one * (t.phi(k, l, i) * t.lambda(l, k));
      }
    }
    ex.consistency.absorb((lhs - rhs).data(), {0, i});
  }
  for (std::size_t j = 0; j < p; ++j) {
    Matrix lhs = pres.c * pres.a[j];
    Matrix rhs(n, n);
    for (std::size_t k = 0; k < p; ++k) {
      rhs += pres.b[k] * t.mu(j, k);
      rhs -= pres.a[k] * t.t(k, j);
      for (std::size_t l = 0; l < p; ++l) {
        for (std::size_t s = 0; s < p; ++s) rhs -= pres.a[s] * (t.phi(k, l, s) * t.psi(l, k, j));
        rhs -= one * (t.mu(k, l) * t.psi(l, k, j));
      }
    }
    ex.consistency.absorb((lhs - rhs).data(), {1, j});
  }
  return ex;
}

IdentityReport check_tensor_identities(const MTensors& t) {
  const std::size_t p = t.p;
  auto delta = [](std::size_t a, std::size_t b) { return a == b ? Scalar(1) : Scalar(0); };
  Residual f1, f2, f3, f4, f5, f6, f7;
  f1.identity = "phi-associativity";
  f2.identity = "phi-mu";
  f3.identity = "psi-associativity";
  f4.identity = "psi-lambda";
  f5.identity = "phi-psi-t";
  f6.identity = "t-mu";
  f7.identity = "t-lambda";

  // Contractions that appear under a Kronecker delta.
  Vector psi_mu(p), phi_lambda(p);
  for (std::size_t x = 0; x < p; ++x)
    for (std::size_t s = 0; s < p; ++s)
      for (std::size_t r = 0; r < p; ++r) {
        psi_mu[x] += t.psi(s, r, x) * t.mu(r, s);
        phi_lambda[x] += t.phi(s, r, x) * t.lambda(r, s);
      }

  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      for (std::size_t k = 0; k < p; ++k) {
        Scalar e2, e4, e6, e7;
        for (std::size_t s = 0; s < p; ++s) {
          e2 += t.phi(j, k, s) * t.mu(i, s) - t.phi(i, j, s) * t.mu(s, k);
          e4 += t.psi(i, j, s) * t.lambda(s, k) - t.psi(j, k, s) * t.lambda(i, s);
        }
        // t-mu is indexed (i, j, k), t-lambda (k, i, j) as in phi^s_jk t^i_s and psi^{k,i}_s t^s_j.
        for (std::size_t s = 0; s < p; ++s) {
          e6 += t.phi(j, k, s) * t.t(i, s) - t.psi(s, i, j) * t.mu(s, k) - t.phi(j, s, i) * t.t(s, k);
          e7 += t.psi(k, i, s) * t.t(s, j) - t.phi(j, s, i) * t.lambda(k, s) - t.psi(s, i, j) * t.t(k, s);
        }
        if (i == j) {
          e6 += psi_mu[k];
          e7 += phi_lambda[k];
        }
        f2.absorb(e2, {i, j, k});
        f4.absorb(e4, {i, j, k});
        f6.absorb(e6, {i, j, k});
        f7.absorb(e7, {k, i, j});
        for (std::size_t l = 0; l < p; ++l) {
          Scalar e1 = t.mu(j, k) * delta(i, l) - delta(i, j) * t.mu(k, l);
          Scalar e3 = delta(k, l) * t.lambda(i, j) - delta(i, l) * t.lambda(j, k);
          Scalar e5 = -delta(l, k) * t.t(i, j) + delta(i, j) * t.t(l, k);
          for (std::size_t s = 0; s < p; ++s) {
            e1 += t.phi(j, k, s) * t.phi(s, l, i) - t.phi(j, s, i) * t.phi(k, l, s);
            e3 += t.psi(i, j, s) * t.psi(s, k, l) - t.psi(j, k, s) * t.psi(i, s, l);
            e5 += t.phi(j, k, s) * t.psi(l, i, s) - t.phi(s, k, l) * t.psi(s, i, j) - t.phi(j, s, i) * t.psi(l, s, k);
            if (i == j)
              for (std::size_t r = 0; r < p; ++r) e5 += t.phi(s, r, l) * t.psi(r, s, k);
          }
          f1.absorb(e1, {j, k, l, i});
          f3.absorb(e3, {i, j, k, l});
          f5.absorb(e5, {j, k, l, i});
        }
      }
  return {{f1, f2, f3, f4, f5, f6, f7}};
}

LinearOperator s_operator(const RPresentation& pres, const MTensors& t) {
  require_sizes(pres);
  const std::size_t n = pres.n, d = n * n, p = pres.length();
  LinearOperator s(d, d);
  for (std::size_t e = 0; e < d; ++e) {
    const Matrix x = Matrix::unit(n, e / n, e % n);
    Matrix img(n, n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        const Scalar& m = t.mu(j, i);
        if (m.is_zero()) continue;
        Matrix term = pres.b[i] * x * pres.b[j] - x * t.lambda(i, j);
        for (std::size_t k = 0; k < p; ++k) term -= x * pres.b[k] * t.psi(i, j, k);
        img += term * m;
      }
    for (std::size_t row = 0; row < d; ++row) s(row, e) = img.data()[row];
  }
  return s;
}

RPresentation shift_presentation(const RPresentation& pres, const Vector& u, const Vector& v) {
  require_sizes(pres);
  const std::size_t p = pres.length();
  if (u.size() != p || v.size() != p) throw std::invalid_argument("shift vectors have wrong length");
  const Matrix one = Matrix::identity(pres.n);
  RPresentation out = pres;
  for (std::size_t i = 0; i < p; ++i) {
    out.a[i] += one * u[i];
    out.b[i] += one * v[i];
    out.c -= pres.b[i] * u[i] + pres.a[i] * v[i] + one * (u[i] * v[i]);
  }
  return out;
}

RPresentation change_presentation_basis(const RPresentation& pres, const Matrix& g) {
  require_sizes(pres);
  const std::size_t p = pres.length();
  auto h = inverse(g);
  if (!h || g.rows() != p) throw std::invalid_argument("basis change must be an invertible p x p matrix");
  RPresentation out = pres;
  for (std::size_t i = 0; i < p; ++i) {
    out.a[i] = Matrix(pres.n, pres.n);
    out.b[i] = Matrix(pres.n, pres.n);
    for (std::size_t k = 0; k < p; ++k) {
      out.a[i] += pres.a[k] * g(i, k);
      out.b[i] += pres.b[k] * (*h)(k, i);
    }
  }
  return out;
}

namespace {
Matrix block_diagonal(const Matrix& x, const Matrix& y) {
  Matrix m(x.rows() + y.rows(), x.cols() + y.cols());
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.rows(); ++i)
    for (std::size_t j = 0; j < y.cols(); ++j) m(x.rows() + i, x.cols() + j) = y(i, j);
  return m;
}
}  // namespace

RPresentation direct_sum(const RPresentation& x, const RPresentation& y) {
  require_sizes(x);
  require_sizes(y);
  if (x.length() != y.length()) throw std::invalid_argument("presentations differ in length");
  RPresentation out;
  out.n = x.n + y.n;
  for (std::size_t i = 0; i < x.length(); ++i) {
    out.a.push_back(block_diagonal(x.a[i], y.a[i]));
    out.b.push_back(block_diagonal(x.b[i], y.b[i]));
  }
  out.c = block_diagonal(x.c, y.c);
  return out;
}

}  // namespace compat
