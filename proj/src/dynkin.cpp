#include "compat/dynkin.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace compat {

MultiplicityMatrix MultiplicityMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size(), s = r ? rows[0].size() : 0;
  MultiplicityMatrix a(r, s);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != s) throw std::invalid_argument("ragged multiplicity matrix");
    for (std::size_t j = 0; j < s; ++j) {
      if (rows[i][j] < 0) throw std::invalid_argument("negative multiplicity");
      a(i, j) = rows[i][j];
    }
  }
  return a;
}

MultiplicityMatrix MultiplicityMatrix::transpose() const {
  MultiplicityMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

MultiplicityMatrix MultiplicityMatrix::permuted(const std::vector<std::size_t>& row_order,
                                                const std::vector<std::size_t>& col_order) const {
  MultiplicityMatrix p(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) p(i, j) = (*this)(row_order[i], col_order[j]);
  return p;
}

std::vector<std::vector<long>> MultiplicityMatrix::to_rows() const {
  std::vector<std::vector<long>> out(rows_, std::vector<long>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i][j] = (*this)(i, j);
  return out;
}

Decomposition is_decomposable(const MultiplicityMatrix& a) {
  const std::size_t r = a.rows(), s = a.cols();
  Decomposition d;
  if (r + s <= 1) return d;
  // Vertices 0..r-1 are rows, r..r+s-1 columns.
  std::vector<bool> seen(r + s, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t u = 0; u < r + s; ++u) {
      if (seen[u]) continue;
      const bool edge = v < r ? (u >= r && a(v, u - r) > 0) : (u < r && a(u, v - r) > 0);
      if (!edge) continue;
      seen[u] = true;
      stack.push_back(u);
    }
  }
  for (std::size_t v = 0; v < r + s; ++v) {
    if (!seen[v]) d.decomposable = true;
    else if (v < r) d.rows.push_back(v);
    else d.cols.push_back(v - r);
  }
  if (!d.decomposable) d.rows.clear(), d.cols.clear();
  return d;
}

Matrix gram_matrix(const MultiplicityMatrix& a) {
  const std::size_t r = a.rows(), s = a.cols();
  Matrix g(r + s, r + s);
  for (std::size_t v = 0; v < r + s; ++v) g(v, v) = 2;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < s; ++j) g(i, r + j) = g(r + j, i) = Scalar(-a(i, j));
  return g;
}

bool is_positive_semidefinite(const Matrix& input) {
  if (!input.square()) throw std::invalid_argument("PSD test needs a square matrix");
  Matrix g = input;
  std::vector<bool> done(g.rows(), false);
  for (std::size_t step = 0; step < g.rows(); ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t v = 0; v < g.rows(); ++v) {
      if (done[v]) continue;
      const auto q = g(v, v).rational();
      if (!q) throw std::invalid_argument("PSD test needs rational entries");
      if (*q < 0) return false;
      if (*q > 0 && !pivot) pivot = v;
    }
    if (!pivot) {
      // Zero diagonal: only the zero matrix is semidefinite.
      for (std::size_t v = 0; v < g.rows(); ++v)
        for (std::size_t u = 0; u < g.rows(); ++u)
          if (!done[v] && !done[u] && !g(v, u).is_zero()) return false;
      return true;
    }
    const std::size_t p = *pivot;
    done[p] = true;
    const Scalar inv = g(p, p).inverse();
    for (std::size_t v = 0; v < g.rows(); ++v) {
      if (done[v] || g(v, p).is_zero()) continue;
      const Scalar f = g(v, p) * inv;
      for (std::size_t u = 0; u < g.rows(); ++u)
        if (!done[u]) g(v, u) -= f * g(p, u);
    }
  }
  return true;
}

std::optional<AdmissibleSolution> solve_adm(const MultiplicityMatrix& a) {
  const std::size_t r = a.rows(), s = a.cols();
  if (r + s == 0) return std::nullopt;
  const auto kernel = nullspace(gram_matrix(a));
  if (kernel.size() != 1) return std::nullopt;
  std::vector<mpq_class> v;
  for (const auto& x : kernel[0]) v.push_back(*x.rational());
  if (v[0] < 0)
    for (auto& x : v) x = -x;
  mpz_class den = 1, num = 0;
  for (const auto& x : v) {
    if (sgn(x) <= 0) return std::nullopt;
    den = lcm(den, mpz_class(x.get_den()));
  }
  std::vector<mpz_class> ints;
  for (const auto& x : v) {
    ints.push_back(mpz_class(x * den));
    num = gcd(num, ints.back());
  }
  AdmissibleSolution sol;
  for (std::size_t v2 = 0; v2 < r + s; ++v2) {
    const long value = mpz_class(ints[v2] / num).get_si();
    (v2 < r ? sol.m : sol.n).push_back(value);
  }
  return sol;
}

bool is_admissible(const MultiplicityMatrix& a) { return !is_decomposable(a).decomposable && solve_adm(a).has_value(); }

std::string family_tag(DynkinFamily family) {
  switch (family) {
    case DynkinFamily::a1: return "A1";
    case DynkinFamily::a_odd: return "A2k-1";
    case DynkinFamily::d4: return "D4";
    case DynkinFamily::d_even: return "D2k";
    case DynkinFamily::d_odd: return "D2k-1";
    case DynkinFamily::e6: return "E6";
    case DynkinFamily::e7: return "E7";
    case DynkinFamily::e8: return "E8";
  }
  return "?";
}

DynkinFamily parse_family(const std::string& tag) {
  for (auto f : {DynkinFamily::a1, DynkinFamily::a_odd, DynkinFamily::d4, DynkinFamily::d_even, DynkinFamily::d_odd,
                 DynkinFamily::e6, DynkinFamily::e7, DynkinFamily::e8})
    if (family_tag(f) == tag) return f;
  throw std::invalid_argument("unknown diagram family '" + tag + "'");
}

std::string diagram_name(const DiagramID& id) {
  switch (id.family) {
    case DynkinFamily::a1: return "A~1";
    case DynkinFamily::a_odd: return "A~" + std::to_string(2 * id.k - 1);
    case DynkinFamily::d4: return "D~4";
    case DynkinFamily::d_even: return "D~" + std::to_string(2 * id.k);
    case DynkinFamily::d_odd: return "D~" + std::to_string(2 * id.k - 1);
    case DynkinFamily::e6: return "E~6";
    case DynkinFamily::e7: return "E~7";
    case DynkinFamily::e8: return "E~8";
  }
  return "?";
}

namespace {

// Rows 1..k-2 of the D patterns (1-based): row 1 meets columns 1, 2, 3 and row
// i >= 2 meets columns i + 1 and i + 2.
void d_chain(MultiplicityMatrix& a, std::size_t k) {
  a(0, 0) = a(0, 1) = a(0, 2) = 1;
  for (std::size_t i = 2; i + 2 <= k; ++i) a(i - 1, i) = a(i - 1, i + 1) = 1;
}

}  // namespace

CatalogEntry catalog(DynkinFamily family, std::size_t k) {
  CatalogEntry e;
  auto fill = [&](std::vector<std::vector<long>> rows, std::vector<long> m, std::vector<long> n) {
    e.matrix = MultiplicityMatrix::from_rows(rows);
    e.dims = {std::move(m), std::move(n)};
  };
  switch (family) {
    case DynkinFamily::a1:
      fill({{2}}, {1}, {1});
      break;
    case DynkinFamily::a_odd: {
      if (k < 2) throw std::invalid_argument("A~(2k-1) needs k >= 2");
      e.matrix = MultiplicityMatrix(k, k);
      for (std::size_t i = 0; i < k; ++i) e.matrix(i, i) = e.matrix(i, (i + 1) % k) = 1;
      e.dims = {std::vector<long>(k, 1), std::vector<long>(k, 1)};
      break;
    }
    case DynkinFamily::d4:
      fill({{1, 1, 1, 1}}, {2}, {1, 1, 1, 1});
      break;
    case DynkinFamily::d_even: {
      if (k < 3) throw std::invalid_argument("D~2k needs k >= 3");
      e.matrix = MultiplicityMatrix(k - 1, k + 2);
      d_chain(e.matrix, k);
      e.matrix(k - 2, k - 1) = e.matrix(k - 2, k) = e.matrix(k - 2, k + 1) = 1;
      e.dims.m.assign(k - 1, 2);
      e.dims.n.assign(k + 2, 2);
      e.dims.n[0] = e.dims.n[1] = e.dims.n[k] = e.dims.n[k + 1] = 1;
      break;
    }
    case DynkinFamily::d_odd: {
      if (k < 3) throw std::invalid_argument("D~(2k-1) needs k >= 3");
      e.matrix = MultiplicityMatrix(k, k);
      d_chain(e.matrix, k);
      e.matrix(k - 2, k - 1) = e.matrix(k - 1, k - 1) = 1;
      e.dims.m.assign(k, 2);
      e.dims.m[k - 2] = e.dims.m[k - 1] = 1;
      e.dims.n.assign(k, 2);
      e.dims.n[0] = e.dims.n[1] = 1;
      break;
    }
    case DynkinFamily::e6:
      fill({{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}, {2, 2, 2}, {3, 1, 1, 1});
      break;
    case DynkinFamily::e7:
      fill({{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}}, {2, 4, 2}, {1, 3, 2, 3, 1});
      break;
    case DynkinFamily::e8:
      fill({{1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}}, {2, 6, 4, 2}, {4, 3, 5, 3, 1});
      break;
  }
  return e;
}

namespace {

std::vector<long> sorted_row(const MultiplicityMatrix& a, std::size_t i) {
  std::vector<long> row(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) row[j] = a(i, j);
  std::sort(row.begin(), row.end());
  return row;
}

// Whether some row order of `a` leaves its columns a rearrangement of those of `b`.
bool columns_match(const MultiplicityMatrix& a, const MultiplicityMatrix& b, const std::vector<std::size_t>& rows) {
  std::vector<std::vector<long>> ca(a.cols()), cb(b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j)
    for (std::size_t i = 0; i < a.rows(); ++i) {
      ca[j].push_back(a(rows[i], j));
      cb[j].push_back(b(i, j));
    }
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return ca == cb;
}

bool match_rows(const MultiplicityMatrix& a, const MultiplicityMatrix& b, std::vector<std::size_t>& rows,
                std::vector<bool>& used) {
  const std::size_t i = rows.size();
  if (i == b.rows()) return columns_match(a, b, rows);
  const auto target = sorted_row(b, i);
  for (std::size_t cand = 0; cand < a.rows(); ++cand) {
    if (used[cand] || sorted_row(a, cand) != target) continue;
    used[cand] = true;
    rows.push_back(cand);
    if (match_rows(a, b, rows, used)) return true;
    rows.pop_back();
    used[cand] = false;
  }
  return false;
}

bool equivalent(const MultiplicityMatrix& a, const MultiplicityMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  std::vector<std::size_t> rows;
  std::vector<bool> used(a.rows(), false);
  return match_rows(a, b, rows, used);
}

// Catalog entries whose shape could match an r x s matrix.
std::vector<DiagramID> candidates(std::size_t r, std::size_t s) {
  std::vector<DiagramID> out;
  for (auto f : {DynkinFamily::a1, DynkinFamily::d4, DynkinFamily::e6, DynkinFamily::e7, DynkinFamily::e8})
    out.push_back({f, 0, false});
  if (r == s && r >= 2) out.push_back({DynkinFamily::a_odd, r, false});
  if (r == s && r >= 3) out.push_back({DynkinFamily::d_odd, r, false});
  if (s == r + 3 && r >= 2) out.push_back({DynkinFamily::d_even, r + 1, false});
  return out;
}

}  // namespace

std::optional<Classification> classify(const MultiplicityMatrix& a) {
  if (!is_admissible(a)) return std::nullopt;
  const auto dims = solve_adm(a);
  for (bool transposed : {false, true}) {
    const MultiplicityMatrix x = transposed ? a.transpose() : a;
    for (DiagramID id : candidates(x.rows(), x.cols())) {
      if (equivalent(x, catalog(id.family, id.k).matrix)) {
        id.transposed = transposed;
        return Classification{id, *dims};
      }
    }
  }
  return std::nullopt;
}

}  // namespace compat
