#include "compat/mstructure.hpp"

#include <stdexcept>

namespace compat {

namespace {

void require_actions_shape(const MPresentation& m) {
  const std::size_t p = m.p();
  if (m.act_a.extent(0) != p || m.act_b.extent(0) != p || m.unit_a.size() != p || m.unit_b.size() != p)
    throw std::invalid_argument("C action tensors do not match the presentation size");
}

}  // namespace

MPresentation with_centrality_actions(MPresentation m) {
  const std::size_t p = m.p();
  const MTensors& t = m.tensors;
  m.has_c_actions = true;
  m.act_a = Tensor2::uniform(p);
  m.act_b = Tensor2::uniform(p);
  m.unit_a = Vector(p);
  m.unit_b = Vector(p);
  for (std::size_t j = 0; j < p; ++j) {
    for (std::size_t s = 0; s < p; ++s) {
      Scalar a = -t.t(s, j), b = -t.t(j, s);
      for (std::size_t k = 0; k < p; ++k)
        for (std::size_t l = 0; l < p; ++l) {
          a -= t.phi(k, l, s) * t.psi(l, k, j);
          b -= t.phi(k, l, j) * t.psi(l, k, s);
        }
      m.act_a(j, s) = a;
      m.act_b(j, s) = b;
    }
    for (std::size_t k = 0; k < p; ++k)
      for (std::size_t l = 0; l < p; ++l) {
        m.unit_a[j] -= t.mu(k, l) * t.psi(l, k, j);
        m.unit_b[j] -= t.phi(k, l, j) * t.lambda(l, k);
      }
  }
  return m;
}

PMPresentation to_pm(const MPresentation& m) {
  const std::size_t p = m.p();
  const MTensors& t = m.tensors;
  PMPresentation pm(std::vector<std::vector<std::size_t>>{{p}});
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < p; ++k) {
        pm.phi(0, 0, 0, i, j, k) = t.phi(i, j, k);
        pm.psi(0, 0, 0, i, j, k) = t.psi(i, j, k);
      }
      pm.mu(0, 0, i, j) = t.mu(i, j);
      pm.lambda(0, 0, i, j) = t.lambda(i, j);
      pm.t(0, 0, i, j) = t.t(i, j);
    }
  if (m.has_c_actions) {
    require_actions_shape(m);
    pm.enable_c_actions();
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t l = 0; l < p; ++l) {
        pm.act_a(0, 0, j, l) = m.act_a(j, l);
        pm.act_b(0, 0, j, l) = m.act_b(j, l);
      }
      pm.unit_a(0, j) = m.unit_a[j];
      pm.unit_b(0, j) = m.unit_b[j];
    }
  }
  return pm;
}

MPresentation from_pm(const PMPresentation& pm) {
  if (pm.blocks() != 1) throw std::invalid_argument("presentation has more than one block");
  const std::size_t p = pm.count(0, 0);
  MPresentation m;
  m.tensors = MTensors::zero(p);
  MTensors& t = m.tensors;
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t k = 0; k < p; ++k) {
        t.phi(i, j, k) = pm.phi(0, 0, 0, i, j, k);
        t.psi(i, j, k) = pm.psi(0, 0, 0, i, j, k);
      }
      t.mu(i, j) = pm.mu(0, 0, i, j);
      t.lambda(i, j) = pm.lambda(0, 0, i, j);
      t.t(i, j) = pm.t(0, 0, i, j);
    }
  if (pm.has_c_actions()) {
    m.has_c_actions = true;
    m.act_a = Tensor2::uniform(p);
    m.act_b = Tensor2::uniform(p);
    m.unit_a = Vector(p);
    m.unit_b = Vector(p);
    for (std::size_t j = 0; j < p; ++j) {
      for (std::size_t l = 0; l < p; ++l) {
        m.act_a(j, l) = pm.act_a(0, 0, j, l);
        m.act_b(j, l) = pm.act_b(0, 0, j, l);
      }
      m.unit_a[j] = pm.unit_a(0, j);
      m.unit_b[j] = pm.unit_b(0, j);
    }
  }
  return m;
}

UElement u_unit() { return pm_idempotent(0); }
UElement u_a(std::size_t i) { return pm_a(0, 0, i); }
UElement u_b(std::size_t i) { return pm_b(0, 0, i); }
UElement u_k(int power) { return pm_k(0, power); }
UElement u_c(const MPresentation& m) { return pm_c(to_pm(m), 0); }

UElement u_multiply(const UElement& x, const UElement& y, const MPresentation& m) {
  return pm_u_multiply(x, y, to_pm(m));
}

IdentityReport check_consistency(const MPresentation& m) { return check_tensor_identities(m.tensors); }

Residual check_K_central(const MPresentation& m) { return pm_check_K_central(to_pm(m)); }

IdentityReport validate_representation(const MPresentation& input, const RPresentation& rep) {
  const std::size_t p = input.p(), n = rep.n;
  if (rep.length() != p) throw std::invalid_argument("representation length differs from the presentation");
  const MPresentation m = input.has_c_actions ? input : with_centrality_actions(input);
  require_actions_shape(m);
  const MTensors& t = m.tensors;
  const Matrix one = Matrix::identity(n);

  Residual aa, bb, ba, ca, bc;
  aa.identity = "A products";
  bb.identity = "B products";
  ba.identity = "BA relation";
  ca.identity = "C right action";
  bc.identity = "C left action";
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) {
      Matrix ra = rep.a[i] * rep.a[j] - one * t.mu(i, j);
      Matrix rb = rep.b[i] * rep.b[j] - one * t.lambda(i, j);
      Matrix rba = rep.b[i] * rep.a[j] - one * t.t(i, j);
      if (i == j) rba -= rep.c;
      for (std::size_t k = 0; k < p; ++k) {
        ra -= rep.a[k] * t.phi(i, j, k);
        rb -= rep.b[k] * t.psi(i, j, k);
        rba -= rep.a[k] * t.psi(k, i, j) + rep.b[k] * t.phi(j, k, i);
      }
      aa.absorb(ra.data(), {i, j});
      bb.absorb(rb.data(), {i, j});
      ba.absorb(rba.data(), {i, j});
    }
  for (std::size_t j = 0; j < p; ++j) {
    Matrix r1 = rep.c * rep.a[j] - one * m.unit_a[j];
    Matrix r2 = rep.b[j] * rep.c - one * m.unit_b[j];
    for (std::size_t k = 0; k < p; ++k) {
      r1 -= rep.b[k] * t.mu(j, k) + rep.a[k] * m.act_a(j, k);
      r2 -= rep.a[k] * t.lambda(k, j) + rep.b[k] * m.act_b(j, k);
    }
    ca.absorb(r1.data(), {j});
    bc.absorb(r2.data(), {j});
  }

  IdentityReport report{{aa, bb, ba, ca, bc}};
  for (const auto* mats : {&rep.a, &rep.b}) {
    Residual r;
    r.identity = mats == &rep.a ? "A non-degeneracy" : "B non-degeneracy";
    auto ind = check_independence(*mats, true);
    if (!ind.independent) r.absorb(ind.witness, {});
    report.families.push_back(r);
  }
  CompatibilityReport comp = check_compatibility({matrix_algebra(n), second_product(rep)});
  comp.circle.identity = "second product associativity";
  comp.mixed.identity = "compatibility with the matrix product";
  report.families.push_back(comp.circle);
  report.families.push_back(comp.mixed);
  return report;
}

namespace {

std::size_t mod(long x, std::size_t n) {
  long r = x % static_cast<long>(n);
  return static_cast<std::size_t>(r < 0 ? r + static_cast<long>(n) : r);
}

Scalar root_for(const Field& field, std::size_t order) {
  return field.exact() ? root_of_unity(static_cast<int>(order)) : Field::floating(field.tol).root(static_cast<int>(order));
}

}  // namespace

MPresentation cyclic_mstructure(std::size_t p, const Field& field) {
  if (p == 0) throw std::invalid_argument("cyclic structure needs p >= 1");
  const std::size_t order = p + 1;
  const Scalar eps = root_for(field, order);
  auto e = [&](long k) { return eps.pow(static_cast<long>(mod(k, order))); };
  // Generator i (1..p) sits at position i - 1.
  MPresentation m;
  m.tensors = MTensors::zero(p);
  MTensors& t = m.tensors;
  m.has_c_actions = true;
  m.act_a = Tensor2::uniform(p);
  m.act_b = Tensor2::uniform(p);
  m.unit_a = Vector(p);
  m.unit_b = Vector(p);
  for (std::size_t i = 1; i <= p; ++i) {
    const long si = static_cast<long>(i);
    for (std::size_t j = 1; j <= p; ++j) {
      const long sj = static_cast<long>(j);
      const std::size_t sum = mod(si + sj, order);
      const Scalar denom = (e(-si) - 1) * (e(-sj) - 1);
      if (sum == 0) {
        t.mu(i - 1, j - 1) = 1;
        t.lambda(i - 1, j - 1) = denom.inverse();
      } else {
        t.phi(i - 1, j - 1, sum - 1) = 1;
        t.psi(i - 1, j - 1, sum - 1) = (e(-si - sj) - 1) / denom;
      }
    }
    t.t(i - 1, i - 1) = (e(-si) - 1).inverse();
    m.act_a(i - 1, i - 1) = (Scalar(1) - e(si)).inverse();
    m.act_b(i - 1, i - 1) = (Scalar(1) - e(si)).inverse();
  }
  return m;
}

MPresentation cyclic_mstructure(std::size_t p) {
  return cyclic_mstructure(p, Field::cyclotomic(static_cast<int>(p + 1)));
}

RPresentation cyclic_representation(std::size_t p, const Scalar& s, const Field& field) {
  if (p == 0) throw std::invalid_argument("cyclic representation needs p >= 1");
  const std::size_t order = p + 1;
  const Scalar eps = root_for(field, order);
  Matrix shift(order, order), diag(order, order);
  for (std::size_t k = 0; k < order; ++k) {
    shift((k + order - 1) % order, k) = 1;  // a e_k = e_{k-1}
    diag(k, k) = s * eps.pow(static_cast<long>(k));
  }
  const Matrix one = Matrix::identity(order);
  auto resolvent = inverse(diag - one);
  if (!resolvent) throw std::invalid_argument("t - 1 is singular: s eps^i = 1 for some i");
  const Matrix b_gen = (diag * eps - one) * *resolvent * shift;

  std::vector<Matrix> a_pow{one}, b_pow{one};
  for (std::size_t k = 1; k < order; ++k) {
    a_pow.push_back(a_pow.back() * shift);
    b_pow.push_back(b_pow.back() * b_gen);
  }
  RPresentation rep;
  rep.n = order;
  for (std::size_t i = 1; i <= p; ++i) {
    rep.a.push_back(a_pow[i]);
    const Scalar scale = (eps.pow(static_cast<long>(order - i)) - 1).inverse();
    rep.b.push_back(b_pow[order - i] * scale);
  }
  rep.c = diag * *resolvent;
  return rep;
}

RPresentation cyclic_representation(std::size_t p, const Scalar& s) {
  return cyclic_representation(p, s, Field::cyclotomic(static_cast<int>(p + 1)));
}

}  // namespace compat
