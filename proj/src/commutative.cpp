#include "compat/commutative.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace compat {

namespace {

void require_shape(const CommutativeData& d) {
  const std::size_t p = d.size();
  if (d.v.size() != p || d.q.rows() != p || d.q.cols() != p)
    throw std::invalid_argument("u, v and q have inconsistent sizes");
}

std::vector<std::size_t> classes_by(std::size_t p, const std::function<bool(std::size_t, std::size_t)>& same) {
  std::vector<std::size_t> cls(p);
  std::vector<std::size_t> reps;
  for (std::size_t i = 0; i < p; ++i) {
    std::size_t c = 0;
    while (c < reps.size() && !same(reps[c], i)) ++c;
    if (c == reps.size()) reps.push_back(i);
    cls[i] = c;
  }
  return cls;
}

std::size_t class_total(const std::vector<std::size_t>& cls) {
  std::size_t n = 0;
  for (auto c : cls) n = std::max(n, c + 1);
  return n;
}

}  // namespace

IdentityReport commutative_data_residual(const CommutativeData& d) {
  require_shape(d);
  const std::size_t p = d.size();
  Residual r3, r4, r5;
  r3.identity = "q quadratic";
  r4.identity = "u - q quadratic";
  r5.identity = "triple condition";
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) continue;
      const Scalar& q = d.q(i, j);
      r3.absorb(q * q - d.u[i] * q - d.v[i], {i, j});
      const Scalar w = d.u[i] - q;
      r4.absorb(w * w - d.u[j] * w - d.v[j], {i, j});
      for (std::size_t k = 0; k < p; ++k) {
        if (k == i || k == j) continue;
        r5.absorb((d.q(i, k) - d.q(j, k)) * (d.q(i, k) - d.q(i, j)), {i, j, k});
      }
    }
  return {{r3, r4, r5}};
}

namespace {

void require_associative(const CommutativeData& d) {
  auto report = commutative_data_residual(d);
  if (const Residual* bad = report.first_failure()) {
    std::string where;
    for (auto w : bad->witness) where += (where.empty() ? "" : ",") + std::to_string(w + 1);
    throw std::invalid_argument("condition '" + bad->identity + "' fails at (" + where + ")");
  }
}

}  // namespace

CommutativeAStructure commutative_a_structure(const CommutativeData& d) {
  require_shape(d);
  require_associative(d);
  const std::size_t p = d.size();
  CommutativeAStructure out;

  StructureConstants b(p, "commutative partner");
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) {
        b.at(i, i, i) = d.u[i];
      } else {
        b.at(i, j, i) = d.u[i] - d.q(i, j);
        b.at(i, j, j) = d.q(i, j);
      }
    }
  // Scalar parts v_i go onto the adjoined unity.
  out.b_algebra = adjoin_unity(b);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) out.b_algebra.at(i + 1, j + 1, 0) = d.v[i];

  MPresentation& m = out.presentation;
  m.tensors = MTensors::zero(p);
  MTensors& t = m.tensors;
  for (std::size_t i = 0; i < p; ++i) {
    t.phi(i, i, i) = 1;
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < p; ++k) t.psi(i, j, k) = b.at(i, j, k);
      t.lambda(i, j) = d.v[i];
    }
  }
  m.has_c_actions = true;
  m.act_a = Tensor2::uniform(p);
  m.act_b = Tensor2::uniform(p);
  m.unit_a = Vector(p);
  m.unit_b = Vector(p);
  for (std::size_t i = 0; i < p; ++i) {
    m.act_a(i, i) = -d.u[i];
    m.act_b(i, i) = -d.u[i];
    m.unit_b[i] = -d.v[i];
  }
  return out;
}

std::string to_string(CommutativeTag tag) {
  switch (tag) {
    case CommutativeTag::regular: return "regular";
    case CommutativeTag::commutative: return "commutative";
    case CommutativeTag::single_class: return "single-class";
    case CommutativeTag::two_classes: return "two-class";
    case CommutativeTag::mat2: return "Mat2";
    case CommutativeTag::unrecognized: return "unrecognized";
  }
  return "unrecognized";
}

CommutativeClassification classify_commutative_a(const CommutativeData& d) {
  require_shape(d);
  require_associative(d);
  const std::size_t p = d.size();
  CommutativeClassification c;
  c.u_class = classes_by(p, [&](std::size_t i, std::size_t j) { return d.u[i] == d.u[j]; });
  c.strict_class = classes_by(p, [&](std::size_t i, std::size_t j) {
    return i == j || (d.u[i] == d.u[j] && d.q(i, j) == d.q(j, i));
  });
  c.class_count = class_total(c.u_class);

  // Regular: q_ij = u_i + tau and v_i = tau^2 + u_i tau for one tau.
  if (p >= 2) {
    const Scalar tau = d.q(0, 1) - d.u[0];
    bool regular = true;
    for (std::size_t i = 0; i < p && regular; ++i) {
      if (!(d.v[i] == tau * tau + d.u[i] * tau)) regular = false;
      for (std::size_t j = 0; j < p && regular; ++j)
        if (i != j && !(d.q(i, j) == d.u[i] + tau)) regular = false;
    }
    if (regular) {
      c.tag = CommutativeTag::regular;
      c.tau = tau;
      return c;
    }
  } else {
    // A single quadratic generator always splits over the complex numbers.
    c.tag = CommutativeTag::regular;
    return c;
  }

  bool commutative = true;
  for (std::size_t i = 0; i < p && commutative; ++i)
    for (std::size_t j = 0; j < p && commutative; ++j) {
      if (i == j) continue;
      if (!(d.u[i] == d.u[j]) || !(d.v[i] == d.v[j]) || !(d.q(i, j) + d.q(j, i) == d.u[i])) commutative = false;
    }
  if (commutative) {
    c.tag = CommutativeTag::commutative;
    return c;
  }

  if (c.class_count == 1) {
    c.tag = CommutativeTag::single_class;
    const std::size_t s = class_total(c.strict_class);
    c.class_q = Matrix(s, s);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j)
        if (i != j) c.class_q(c.strict_class[i], c.strict_class[j]) = d.q(i, j);
    // q takes the values -tau and u + tau; either may be called -tau.
    c.tau = -d.q(0, 1);
    return c;
  }
  if (c.class_count == 2) {
    c.tag = CommutativeTag::two_classes;
    std::size_t other = 0;
    while (c.u_class[other] == c.u_class[0]) ++other;
    c.tau = (d.v[other] - d.v[0]) / (d.u[other] - d.u[0]);
    return c;
  }
  if (p == 3) {
    // q(a, b) depends only on b.
    bool column_constant = true;
    for (std::size_t b = 0; b < 3; ++b) {
      const std::size_t a1 = (b + 1) % 3, a2 = (b + 2) % 3;
      if (!(d.q(a1, b) == d.q(a2, b))) column_constant = false;
    }
    if (column_constant) {
      c.tag = CommutativeTag::mat2;
      return c;
    }
  }
  c.tag = CommutativeTag::unrecognized;
  return c;
}

}  // namespace compat
