#include "compat/json_io.hpp"

#include <algorithm>
#include <array>
#include <tuple>

namespace compat {

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) { throw SchemaError(path + ": " + what); }

const Json& member(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object()) fail(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) fail(path, "missing key '" + key + "'");
  return *it;
}

std::size_t index_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<long>() < 0) fail(path, "expected a nonnegative integer");
  return j.get<std::size_t>();
}

// 1-based on the wire.
std::size_t position_from_json(const Json& j, std::size_t bound, const std::string& path) {
  const std::size_t v = index_from_json(j, path);
  if (v == 0 || v > bound) fail(path, "index out of range 1.." + std::to_string(bound));
  return v - 1;
}

const Json& array_of(const Json& j, const std::string& path) {
  if (!j.is_array()) fail(path, "expected an array");
  return j;
}

// Sparse list entry [i1, ..., iN, "scalar"].
template <std::size_t N>
Json sparse_entry(const std::array<std::size_t, N>& idx, const Scalar& s) {
  Json e = Json::array();
  for (auto i : idx) e.push_back(i + 1);
  e.push_back(s.str());
  return e;
}

template <std::size_t N>
void read_sparse(const Json& list, const std::array<std::size_t, N>& bounds, const Field& field,
                 const std::string& path, const std::function<void(const std::array<std::size_t, N>&, Scalar)>& put) {
  array_of(list, path);
  for (std::size_t n = 0; n < list.size(); ++n) {
    const std::string here = path + "[" + std::to_string(n) + "]";
    const Json& e = list[n];
    if (!e.is_array() || e.size() != N + 1) fail(here, "expected " + std::to_string(N) + " indices and a scalar");
    std::array<std::size_t, N> idx;
    for (std::size_t a = 0; a < N; ++a) idx[a] = position_from_json(e[a], bounds[a], here + "[" + std::to_string(a) + "]");
    put(idx, scalar_from_json(e[N], field, here + "[" + std::to_string(N) + "]"));
  }
}

}  // namespace

Json document(const std::string& kind, const Field& field) {
  Json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = kind;
  doc["field"] = field_to_json(field);
  return doc;
}

Field document_field(const Json& doc, const Field& fallback) {
  if (doc.is_object() && doc.contains("field")) return field_from_json(doc["field"]);
  return fallback;
}

Json field_to_json(const Field& field) {
  Json j;
  if (field.exact()) {
    j["kind"] = "cyclotomic";
    j["order"] = field.order;
  } else {
    j["kind"] = "float";
    j["tol"] = field.tol;
  }
  return j;
}

Field field_from_json(const Json& j, const std::string& path) {
  const Json& kind = member(j, "kind", path);
  if (kind == "cyclotomic") {
    const std::size_t order = index_from_json(member(j, "order", path), path + ".order");
    if (order == 0) fail(path + ".order", "order must be positive");
    return Field::cyclotomic(static_cast<int>(order));
  }
  if (kind == "float") {
    const Json& tol = member(j, "tol", path);
    if (!tol.is_number()) fail(path + ".tol", "expected a number");
    return Field::floating(tol.get<double>());
  }
  fail(path + ".kind", "expected \"cyclotomic\" or \"float\"");
}

Json scalar_to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const Json& j, const Field& field, const std::string& path) {
  try {
    if (j.is_number_integer()) return field.lift(Scalar(j.get<long>()));
    if (j.is_string()) return field.parse(j.get<std::string>());
  } catch (const std::exception& e) {
    fail(path, e.what());
  }
  fail(path, "expected a scalar string or integer");
}

Json vector_to_json(const Vector& v) {
  Json j = Json::array();
  for (const auto& s : v) j.push_back(scalar_to_json(s));
  return j;
}

Vector vector_from_json(const Json& j, const Field& field, const std::string& path) {
  array_of(j, path);
  Vector v;
  for (std::size_t k = 0; k < j.size(); ++k) v.push_back(scalar_from_json(j[k], field, path + "[" + std::to_string(k) + "]"));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json j = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    j.push_back(row);
  }
  return j;
}

Matrix matrix_from_json(const Json& j, const Field& field, const std::string& path) {
  array_of(j, path);
  std::vector<Vector> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    rows.push_back(vector_from_json(j[r], field, path + "[" + std::to_string(r) + "]"));
    if (rows.back().size() != rows.front().size()) fail(path, "ragged matrix");
  }
  Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  return m;
}

Json structure_to_json(const StructureConstants& sc) {
  const std::size_t d = sc.dim();
  Json j;
  j["dim"] = d;
  if (!sc.label().empty()) j["label"] = sc.label();
  Json c = Json::array();
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t l = 0; l < d; ++l)
        if (!sc.at(i, l, k).is_zero()) c.push_back(sparse_entry<3>({k, i, l}, sc.at(i, l, k)));
  j["c"] = c;
  return j;
}

StructureConstants structure_from_json(const Json& j, const Field& field, const std::string& path) {
  const std::size_t d = index_from_json(member(j, "dim", path), path + ".dim");
  StructureConstants sc(d, j.contains("label") && j["label"].is_string() ? j["label"].get<std::string>() : "");
  read_sparse<3>(member(j, "c", path), {d, d, d}, field, path + ".c",
                 [&](const std::array<std::size_t, 3>& x, Scalar s) { sc.at(x[1], x[2], x[0]) = std::move(s); });
  return sc;
}

Json pencil_to_json(const Pencil& p) {
  Json j;
  j["star"] = structure_to_json(p.star);
  j["circle"] = structure_to_json(p.circle);
  return j;
}

Pencil pencil_from_json(const Json& j, const Field& field, const std::string& path) {
  Pencil p{structure_from_json(member(j, "star", path), field, path + ".star"),
           structure_from_json(member(j, "circle", path), field, path + ".circle")};
  if (p.star.dim() != p.circle.dim()) fail(path, "star and circle differ in dimension");
  return p;
}

Json residual_to_json(const Residual& r) {
  Json j;
  j["identity"] = r.identity;
  j["vanishes"] = r.vanishes;
  j["max_abs"] = r.max_abs;
  if (!r.vanishes) {
    Json w = Json::array();
    for (auto x : r.witness) w.push_back(x + 1);
    j["witness"] = w;
  }
  return j;
}

Json report_to_json(const IdentityReport& r) {
  Json j = Json::array();
  for (const auto& f : r.families) j.push_back(residual_to_json(f));
  return j;
}

Json presentation_to_json(const RPresentation& rep) {
  Json j;
  j["n"] = rep.n;
  Json a = Json::array(), b = Json::array();
  for (const auto& m : rep.a) a.push_back(matrix_to_json(m));
  for (const auto& m : rep.b) b.push_back(matrix_to_json(m));
  j["a"] = a;
  j["b"] = b;
  j["c"] = matrix_to_json(rep.c);
  return j;
}

RPresentation presentation_from_json(const Json& j, const Field& field, const std::string& path) {
  RPresentation rep;
  rep.n = index_from_json(member(j, "n", path), path + ".n");
  auto square = [&](const Matrix& m, const std::string& where) {
    if (m.rows() != rep.n || m.cols() != rep.n) fail(where, "expected an n x n matrix");
    return m;
  };
  for (const char* key : {"a", "b"}) {
    const Json& list = array_of(member(j, key, path), path + "." + key);
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string where = path + "." + key + "[" + std::to_string(i) + "]";
      (key[0] == 'a' ? rep.a : rep.b).push_back(square(matrix_from_json(list[i], field, where), where));
    }
  }
  if (rep.a.size() != rep.b.size()) fail(path, "a and b differ in length");
  rep.c = square(matrix_from_json(member(j, "c", path), field, path + ".c"), path + ".c");
  return rep;
}

namespace {

Json tensor3_to_json(const Tensor3& t) {
  Json j = Json::array();
  const std::size_t p = t.extent(0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t l = 0; l < p; ++l)
        if (!t(i, k, l).is_zero()) j.push_back(sparse_entry<3>({i, k, l}, t(i, k, l)));
  return j;
}

Json tensor2_to_json(const Tensor2& t) {
  Json j = Json::array();
  const std::size_t p = t.extent(0);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t k = 0; k < p; ++k)
      if (!t(i, k).is_zero()) j.push_back(sparse_entry<2>({i, k}, t(i, k)));
  return j;
}

Json vector_sparse_to_json(const Vector& v) {
  Json j = Json::array();
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) j.push_back(sparse_entry<1>({i}, v[i]));
  return j;
}

}  // namespace

Json mpresentation_to_json(const MPresentation& m) {
  const MTensors& t = m.tensors;
  Json j;
  j["p"] = t.p;
  j["phi"] = tensor3_to_json(t.phi);
  j["mu"] = tensor2_to_json(t.mu);
  j["psi"] = tensor3_to_json(t.psi);
  j["lambda"] = tensor2_to_json(t.lambda);
  j["t"] = tensor2_to_json(t.t);
  if (m.has_c_actions) {
    j["act_a"] = tensor2_to_json(m.act_a);
    j["act_b"] = tensor2_to_json(m.act_b);
    j["unit_a"] = vector_sparse_to_json(m.unit_a);
    j["unit_b"] = vector_sparse_to_json(m.unit_b);
  }
  return j;
}

MPresentation mpresentation_from_json(const Json& j, const Field& field, const std::string& path) {
  const std::size_t p = index_from_json(member(j, "p", path), path + ".p");
  MPresentation m;
  m.tensors = MTensors::zero(p);
  MTensors& t = m.tensors;
  auto three = [&](const char* key, Tensor3& out) {
    read_sparse<3>(member(j, key, path), {p, p, p}, field, path + "." + key,
                   [&](const std::array<std::size_t, 3>& x, Scalar s) { out(x[0], x[1], x[2]) = std::move(s); });
  };
  auto two = [&](const char* key, Tensor2& out) {
    read_sparse<2>(member(j, key, path), {p, p}, field, path + "." + key,
                   [&](const std::array<std::size_t, 2>& x, Scalar s) { out(x[0], x[1]) = std::move(s); });
  };
  auto one = [&](const char* key, Vector& out) {
    read_sparse<1>(member(j, key, path), {p}, field, path + "." + key,
                   [&](const std::array<std::size_t, 1>& x, Scalar s) { out[x[0]] = std::move(s); });
  };
  three("phi", t.phi);
  three("psi", t.psi);
  two("mu", t.mu);
  two("lambda", t.lambda);
  two("t", t.t);
  if (j.contains("act_a")) {
    m.has_c_actions = true;
    m.act_a = Tensor2::uniform(p);
    m.act_b = Tensor2::uniform(p);
    m.unit_a = Vector(p);
    m.unit_b = Vector(p);
    two("act_a", m.act_a);
    two("act_b", m.act_b);
    one("unit_a", m.unit_a);
    one("unit_b", m.unit_b);
  }
  return m;
}

namespace {

// Bounds of the Latin indices of each PM tensor, given its block indices.
std::size_t pm_width(const PMPresentation& pres) {
  std::size_t w = 0;
  for (const auto& row : pres.counts())
    for (auto c : row) w = std::max(w, c);
  return w;
}

}  // namespace

Json pmpresentation_to_json(const PMPresentation& pres) {
  const std::size_t m = pres.blocks(), w = pm_width(pres);
  Json j;
  j["m"] = m;
  j["p"] = pres.counts();
  j["c_actions"] = pres.has_c_actions();
  Json phi = Json::array(), psi = Json::array(), mu = Json::array(), lambda = Json::array(), t = Json::array(),
       act_a = Json::array(), act_b = Json::array(), unit_a = Json::array(), unit_b = Json::array();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t i = 0; i < w; ++i)
        for (std::size_t k = 0; k < w; ++k) {
          auto put2 = [&](Json& list, const Scalar& s) {
            if (!s.is_zero()) list.push_back(sparse_entry<4>({a, b, i, k}, s));
          };
          put2(mu, pres.mu(a, b, i, k));
          put2(lambda, pres.lambda(a, b, i, k));
          put2(t, pres.t(a, b, i, k));
          if (pres.has_c_actions()) {
            put2(act_a, pres.act_a(a, b, i, k));
            put2(act_b, pres.act_b(a, b, i, k));
          }
          for (std::size_t c = 0; c < m; ++c)
            for (std::size_t l = 0; l < w; ++l) {
              if (!pres.phi(a, b, c, i, k, l).is_zero())
                phi.push_back(sparse_entry<6>({a, b, c, i, k, l}, pres.phi(a, b, c, i, k, l)));
              if (!pres.psi(a, b, c, i, k, l).is_zero())
                psi.push_back(sparse_entry<6>({a, b, c, i, k, l}, pres.psi(a, b, c, i, k, l)));
            }
        }
      if (a == b && pres.has_c_actions())
        for (std::size_t i = 0; i < w; ++i) {
          if (!pres.unit_a(a, i).is_zero()) unit_a.push_back(sparse_entry<2>({a, i}, pres.unit_a(a, i)));
          if (!pres.unit_b(a, i).is_zero()) unit_b.push_back(sparse_entry<2>({a, i}, pres.unit_b(a, i)));
        }
    }
  Json tensors;
  tensors["phi"] = phi;
  tensors["mu"] = mu;
  tensors["psi"] = psi;
  tensors["lambda"] = lambda;
  tensors["t"] = t;
  if (pres.has_c_actions()) {
    tensors["act_a"] = act_a;
    tensors["act_b"] = act_b;
    tensors["unit_a"] = unit_a;
    tensors["unit_b"] = unit_b;
  }
  j["tensors"] = tensors;
  return j;
}

PMPresentation pmpresentation_from_json(const Json& j, const Field& field, const std::string& path) {
  const std::size_t m = index_from_json(member(j, "m", path), path + ".m");
  const Json& pj = array_of(member(j, "p", path), path + ".p");
  if (pj.size() != m) fail(path + ".p", "expected m rows");
  std::vector<std::vector<std::size_t>> counts(m);
  for (std::size_t a = 0; a < m; ++a) {
    const std::string here = path + ".p[" + std::to_string(a) + "]";
    if (!pj[a].is_array() || pj[a].size() != m) fail(here, "expected m entries");
    for (std::size_t b = 0; b < m; ++b) counts[a].push_back(index_from_json(pj[a][b], here));
  }
  PMPresentation pres(counts);
  const std::size_t w = pm_width(pres);
  const Json& tensors = member(j, "tensors", path);
  const std::string tp = path + ".tensors";
  using Put4 = std::function<Scalar&(std::size_t, std::size_t, std::size_t, std::size_t)>;
  auto four = [&](const char* key, const Put4& slot) {
    read_sparse<4>(member(tensors, key, tp), {m, m, w, w}, field, tp + "." + key,
                   [&](const std::array<std::size_t, 4>& x, Scalar s) { slot(x[0], x[1], x[2], x[3]) = std::move(s); });
  };
  auto six = [&](const char* key, bool is_phi) {
    read_sparse<6>(member(tensors, key, tp), {m, m, m, w, w, w}, field, tp + "." + key,
                   [&](const std::array<std::size_t, 6>& x, Scalar s) {
                     (is_phi ? pres.phi(x[0], x[1], x[2], x[3], x[4], x[5])
                             : pres.psi(x[0], x[1], x[2], x[3], x[4], x[5])) = std::move(s);
                   });
  };
  six("phi", true);
  six("psi", false);
  four("mu", [&](auto a, auto b, auto i, auto k) -> Scalar& { return pres.mu(a, b, i, k); });
  four("lambda", [&](auto a, auto b, auto i, auto k) -> Scalar& { return pres.lambda(a, b, i, k); });
  four("t", [&](auto a, auto b, auto i, auto k) -> Scalar& { return pres.t(a, b, i, k); });
  const bool actions = j.contains("c_actions") && j["c_actions"].is_boolean() && j["c_actions"].get<bool>();
  if (actions) {
    pres.enable_c_actions();
    four("act_a", [&](auto a, auto b, auto i, auto k) -> Scalar& { return pres.act_a(a, b, i, k); });
    four("act_b", [&](auto a, auto b, auto i, auto k) -> Scalar& { return pres.act_b(a, b, i, k); });
    for (const char* key : {"unit_a", "unit_b"})
      read_sparse<2>(member(tensors, key, tp), {m, w}, field, tp + "." + key,
                     [&](const std::array<std::size_t, 2>& x, Scalar s) {
                       (key[5] == 'a' ? pres.unit_a(x[0], x[1]) : pres.unit_b(x[0], x[1])) = std::move(s);
                     });
  }
  return pres;
}

Json pmrepresentation_to_json(const PMRepresentation& rep) {
  const std::size_t m = rep.blocks();
  Json j;
  j["dims"] = rep.dims;
  Json gens;
  for (const char letter : {'a', 'b'})
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t y = 0; y < m; ++y) {
        const auto& mats = letter == 'a' ? rep.a[x][y] : rep.b[x][y];
        for (std::size_t i = 0; i < mats.size(); ++i)
          gens[std::string(1, letter) + "/" + std::to_string(i + 1) + "/" + std::to_string(x + 1) + "/" +
               std::to_string(y + 1)] = matrix_to_json(mats[i]);
      }
  for (std::size_t x = 0; x < m; ++x) gens["c/" + std::to_string(x + 1)] = matrix_to_json(rep.c[x]);
  j["generators"] = gens;
  return j;
}

PMRepresentation pmrepresentation_from_json(const Json& j, const PMPresentation& pres, const Field& field,
                                            const std::string& path) {
  const std::size_t m = pres.blocks();
  PMRepresentation rep;
  const Json& dims = array_of(member(j, "dims", path), path + ".dims");
  if (dims.size() != m) fail(path + ".dims", "expected one dimension per block");
  for (std::size_t x = 0; x < m; ++x) rep.dims.push_back(index_from_json(dims[x], path + ".dims"));
  const Json& gens = member(j, "generators", path);
  const std::string gp = path + ".generators";
  auto read = [&](const std::string& key, std::size_t rows, std::size_t cols) {
    const Matrix mat = matrix_from_json(member(gens, key, gp), field, gp + "." + key);
    if (mat.rows() != rows || mat.cols() != cols) fail(gp + "." + key, "matrix has the wrong shape");
    return mat;
  };
  rep.a.assign(m, std::vector<std::vector<Matrix>>(m));
  rep.b = rep.a;
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      const std::string tail = "/" + std::to_string(x + 1) + "/" + std::to_string(y + 1);
      for (std::size_t i = 0; i < pres.count(x, y); ++i)
        rep.a[x][y].push_back(read("a/" + std::to_string(i + 1) + tail, rep.dims[x], rep.dims[y]));
      for (std::size_t i = 0; i < pres.count(y, x); ++i)
        rep.b[x][y].push_back(read("b/" + std::to_string(i + 1) + tail, rep.dims[x], rep.dims[y]));
    }
    rep.c.push_back(read("c/" + std::to_string(x + 1), rep.dims[x], rep.dims[x]));
  }
  return rep;
}

CommutativeData commutative_from_json(const Json& j, const Field& field, const std::string& path) {
  CommutativeData d{vector_from_json(member(j, "u", path), field, path + ".u"),
                    vector_from_json(member(j, "v", path), field, path + ".v"),
                    matrix_from_json(member(j, "q", path), field, path + ".q")};
  const std::size_t p = d.size();
  if (d.v.size() != p || d.q.rows() != p || d.q.cols() != p) fail(path, "u, v and q have inconsistent sizes");
  return d;
}

Json commutative_to_json(const CommutativeData& d) {
  Json j;
  j["u"] = vector_to_json(d.u);
  j["v"] = vector_to_json(d.v);
  j["q"] = matrix_to_json(d.q);
  return j;
}

Json multiplicity_to_json(const MultiplicityMatrix& a) { return a.to_rows(); }

MultiplicityMatrix multiplicity_from_json(const Json& j, const std::string& path) {
  array_of(j, path);
  std::vector<std::vector<long>> rows;
  for (std::size_t r = 0; r < j.size(); ++r) {
    const std::string here = path + "[" + std::to_string(r) + "]";
    array_of(j[r], here);
    rows.emplace_back();
    for (std::size_t c = 0; c < j[r].size(); ++c)
      rows.back().push_back(static_cast<long>(index_from_json(j[r][c], here + "[" + std::to_string(c) + "]")));
  }
  try {
    return MultiplicityMatrix::from_rows(rows);
  } catch (const std::invalid_argument& e) {
    fail(path, e.what());
  }
}

Json bracket_to_json(const LinearPoissonBracket& b) {
  const std::size_t d = b.dim();
  Json j;
  j["dim"] = d;
  Json g = Json::array();
  for (std::size_t c = 0; c < d; ++c)
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t e = a + 1; e < d; ++e)
        if (!b.gamma.at(a, e, c).is_zero()) g.push_back(sparse_entry<3>({c, a, e}, b.gamma.at(a, e, c)));
  j["gamma"] = g;
  return j;
}

}  // namespace compat
