#include "compat/pm_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace compat {

PMPresentation::PMPresentation(std::vector<std::vector<std::size_t>> counts)
    : m_(counts.size()), counts_(std::move(counts)) {
  for (const auto& row : counts_) {
    if (row.size() != m_) throw std::invalid_argument("block counts must form a square matrix");
    for (auto c : row) w_ = std::max(w_, c);
  }
  const std::size_t two = m_ * m_ * w_ * w_;
  phi_.resize(two * m_ * w_);
  psi_.resize(two * m_ * w_);
  mu_.resize(two);
  lambda_.resize(two);
  t_.resize(two);
  act_a_.resize(two);
  act_b_.resize(two);
  unit_a_.resize(m_ * w_);
  unit_b_.resize(m_ * w_);
}

bool operator==(const PMPresentation& x, const PMPresentation& y) {
  auto same = [](const std::vector<Scalar>& u, const std::vector<Scalar>& v) {
    if (u.size() != v.size()) return false;
    for (std::size_t k = 0; k < u.size(); ++k)
      if (!(u[k] == v[k])) return false;
    return true;
  };
  return x.counts_ == y.counts_ && x.has_c_ == y.has_c_ && same(x.phi_, y.phi_) && same(x.psi_, y.psi_) &&
         same(x.mu_, y.mu_) && same(x.lambda_, y.lambda_) && same(x.t_, y.t_) && same(x.act_a_, y.act_a_) &&
         same(x.act_b_, y.act_b_) && same(x.unit_a_, y.unit_a_) && same(x.unit_b_, y.unit_b_);
}

PMUElement PMUElement::word(const Word& w, const Scalar& coefficient) {
  PMUElement e;
  e.add(w, coefficient);
  return e;
}

Scalar PMUElement::coefficient(const Word& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Scalar() : it->second;
}

void PMUElement::add(const Word& w, const Scalar& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, fresh] = terms_.try_emplace(w, coefficient);
  if (fresh) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

int PMUElement::max_power() const {
  int p = 0;
  for (const auto& [w, c] : terms_) p = std::max(p, w.power);
  return p;
}

PMUElement& PMUElement::operator+=(const PMUElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, c);
  return *this;
}

PMUElement& PMUElement::operator-=(const PMUElement& o) {
  for (const auto& [w, c] : o.terms_) add(w, -c);
  return *this;
}

PMUElement& PMUElement::operator*=(const Scalar& s) {
  if (s.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [w, c] : terms_) c *= s;
  return *this;
}

namespace {

std::string gen_str(const Gen& g, char letter) {
  if (g.is_unit()) return "e" + std::to_string(g.from + 1);
  return std::string(1, letter) + "(" + std::to_string(g.from + 1) + "," + std::to_string(g.to + 1) + ";" +
         std::to_string(g.index + 1) + ")";
}

}  // namespace

std::string PMUElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (w.a.is_unit() && w.b.is_unit()) {
      out += " " + gen_str(w.a, 'A');
    } else {
      if (!w.a.is_unit()) out += " " + gen_str(w.a, 'A');
      if (!w.b.is_unit()) out += " " + gen_str(w.b, 'B');
    }
    if (w.power > 0) out += " K" + std::to_string(w.left() + 1) + "^" + std::to_string(w.power);
  }
  return out;
}

namespace {

Gen unit_gen(std::size_t block) { return {static_cast<int>(block), static_cast<int>(block), -1}; }
Gen gen(std::size_t from, std::size_t to, std::size_t index) {
  return {static_cast<int>(from), static_cast<int>(to), static_cast<int>(index)};
}

using Factor = std::pair<Gen, Scalar>;

struct Middle {
  Gen a;
  Gen b;
  Scalar coefficient;
  int extra_power;
};

// Rewriting rules of the normal form.
class Engine {
 public:
  explicit Engine(const PMPresentation& p) : p_(p) {}

  // x in {A[a,v], e_a}, y in {A[v,u], e_v}
  std::vector<Factor> mul_aa(const Gen& x, const Gen& y) const {
    if (x.is_unit()) return {{y, 1}};
    if (y.is_unit()) return {{x, 1}};
    const std::size_t a = x.from, v = x.to, u = y.to, i = x.index, k = y.index;
    std::vector<Factor> out;
    for (std::size_t r = 0; r < p_.count(a, u); ++r) {
      const Scalar& c = p_.phi(a, v, u, i, k, r);
      if (!c.is_zero()) out.emplace_back(gen(a, u, r), c);
    }
    if (a == u && !p_.mu(a, v, i, k).is_zero()) out.emplace_back(unit_gen(a), p_.mu(a, v, i, k));
    return out;
  }

  // x in {B[a,v], e_a}, y in {B[v,u], e_v}
  std::vector<Factor> mul_bb(const Gen& x, const Gen& y) const {
    if (x.is_unit()) return {{y, 1}};
    if (y.is_unit()) return {{x, 1}};
    const std::size_t a = x.from, v = x.to, u = y.to, i = x.index, k = y.index;
    std::vector<Factor> out;
    for (std::size_t r = 0; r < p_.count(u, a); ++r) {
      const Scalar& c = p_.psi(a, v, u, i, k, r);
      if (!c.is_zero()) out.emplace_back(gen(a, u, r), c);
    }
    if (a == u && !p_.lambda(a, v, i, k).is_zero()) out.emplace_back(unit_gen(a), p_.lambda(a, v, i, k));
    return out;
  }

  // b in {B[v,w], e_v}, a in {A[w,u], e_w}
  std::vector<Middle> mul_ba(const Gen& b, const Gen& a) const {
    if (b.is_unit() && a.is_unit()) return {{b, b, 1, 0}};
    if (b.is_unit()) return {{a, unit_gen(a.to), 1, 0}};
    if (a.is_unit()) return {{unit_gen(b.from), b, 1, 0}};
    const std::size_t v = b.from, w = b.to, u = a.to, j = b.index, k = a.index;
    std::vector<Middle> out;
    for (std::size_t r = 0; r < p_.count(u, v); ++r) {
      const Scalar& c = p_.phi(w, u, v, k, r, j);
      if (!c.is_zero()) out.push_back({unit_gen(v), gen(v, u, r), c, 0});
    }
    for (std::size_t r = 0; r < p_.count(v, u); ++r) {
      const Scalar& c = p_.psi(u, v, w, r, j, k);
      if (!c.is_zero()) out.push_back({gen(v, u, r), unit_gen(u), c, 0});
    }
    if (v == u) {
      const Scalar& c = p_.t(v, w, j, k);
      if (!c.is_zero()) out.push_back({unit_gen(v), unit_gen(v), c, 0});
      if (j == k) {
        // C_v = K_v - sum_r A[v,r] B[r,v]
        out.push_back({unit_gen(v), unit_gen(v), 1, 1});
        for (std::size_t rho = 0; rho < p_.blocks(); ++rho)
          for (std::size_t r = 0; r < p_.count(v, rho); ++r) out.push_back({gen(v, rho, r), gen(rho, v, r), -1, 0});
      }
    }
    return out;
  }

  void multiply_words(const Word& x, const Word& y, const Scalar& coefficient, PMUElement& out) const {
    if (x.right() != y.left()) return;
    for (const auto& mid : mul_ba(x.b, y.a)) {
      const auto lefts = mul_aa(x.a, mid.a);
      const auto rights = mul_bb(mid.b, y.b);
      for (const auto& [l, cl] : lefts) {
        Scalar cm = coefficient * mid.coefficient * cl;
        for (const auto& [r, cr] : rights) out.add(Word{l, r, x.power + y.power + mid.extra_power}, cm * cr);
      }
    }
  }

 private:
  const PMPresentation& p_;
};

}  // namespace

PMUElement pm_unit(const PMPresentation& pres) {
  PMUElement e;
  for (std::size_t a = 0; a < pres.blocks(); ++a) e.add(Word{unit_gen(a), unit_gen(a), 0}, 1);
  return e;
}

PMUElement pm_idempotent(std::size_t block) {
  return PMUElement::word(Word{unit_gen(block), unit_gen(block), 0});
}

PMUElement pm_a(std::size_t from, std::size_t to, std::size_t index) {
  return PMUElement::word(Word{gen(from, to, index), unit_gen(to), 0});
}

PMUElement pm_b(std::size_t from, std::size_t to, std::size_t index) {
  return PMUElement::word(Word{unit_gen(from), gen(from, to, index), 0});
}

PMUElement pm_k(std::size_t block, int power) {
  return PMUElement::word(Word{unit_gen(block), unit_gen(block), power});
}

PMUElement pm_c(const PMPresentation& pres, std::size_t block) {
  PMUElement c = pm_k(block);
  for (std::size_t v = 0; v < pres.blocks(); ++v)
    for (std::size_t i = 0; i < pres.count(block, v); ++i) c.add(Word{gen(block, v, i), gen(v, block, i), 0}, -1);
  return c;
}

PMUElement pm_u_multiply(const PMUElement& x, const PMUElement& y, const PMPresentation& pres) {
  Engine engine(pres);
  PMUElement out;
  for (const auto& [wx, cx] : x.terms())
    for (const auto& [wy, cy] : y.terms()) engine.multiply_words(wx, wy, cx * cy, out);
  return out;
}

namespace {

struct Generator {
  bool is_a;
  std::size_t from, to, index;
  PMUElement element() const { return is_a ? pm_a(from, to, index) : pm_b(from, to, index); }
};

std::vector<Generator> generators(const PMPresentation& pres, bool is_a) {
  std::vector<Generator> out;
  for (std::size_t a = 0; a < pres.blocks(); ++a)
    for (std::size_t b = 0; b < pres.blocks(); ++b) {
      const std::size_t n = is_a ? pres.count(a, b) : pres.count(b, a);
      for (std::size_t i = 0; i < n; ++i) out.push_back({is_a, a, b, i});
    }
  return out;
}

void absorb_element(Residual& res, const PMUElement& diff, std::vector<std::size_t> where) {
  Vector values;
  for (const auto& [w, c] : diff.terms()) values.push_back(c);
  res.absorb(values, std::move(where));
}

}  // namespace

std::vector<Word> pm_basis_words(const PMPresentation& pres, int max_power) {
  const std::size_t m = pres.blocks();
  std::vector<Word> words;
  for (int power = 0; power <= max_power; ++power)
    for (std::size_t x = 0; x < m; ++x)
      for (std::size_t v = 0; v < m; ++v) {
        std::vector<Gen> left, right;
        if (x == v) left.push_back(unit_gen(x));
        for (std::size_t i = 0; i < pres.count(x, v); ++i) left.push_back(gen(x, v, i));
        for (std::size_t y = 0; y < m; ++y) {
          right.clear();
          if (v == y) right.push_back(unit_gen(v));
          for (std::size_t i = 0; i < pres.count(y, v); ++i) right.push_back(gen(v, y, i));
          for (const auto& a : left)
            for (const auto& b : right) words.push_back(Word{a, b, power});
        }
      }
  return words;
}

PMUElement pm_random_element(const PMPresentation& pres, std::mt19937_64& rng, int max_power, std::size_t terms) {
  const auto words = pm_basis_words(pres, max_power);
  std::uniform_int_distribution<std::size_t> pick(0, words.size() - 1);
  std::uniform_int_distribution<long> coefficient(-3, 3);
  PMUElement e;
  for (std::size_t t = 0; t < terms; ++t) {
    const Word& w = words[pick(rng)];
    e.add(w, Scalar(coefficient(rng)));
  }
  return e;
}

Residual pm_sampled_associativity(const PMPresentation& pres, std::mt19937_64& rng, std::size_t samples,
                                  int max_power) {
  Residual res;
  res.identity = "sampled associativity";
  for (std::size_t n = 0; n < samples; ++n) {
    const PMUElement x = pm_random_element(pres, rng, max_power);
    const PMUElement y = pm_random_element(pres, rng, max_power);
    const PMUElement z = pm_random_element(pres, rng, max_power);
    const PMUElement diff =
        pm_u_multiply(pm_u_multiply(x, y, pres), z, pres) - pm_u_multiply(x, pm_u_multiply(y, z, pres), pres);
    Vector coefficients;
    for (const auto& [w, c] : diff.terms()) coefficients.push_back(c);
    res.absorb(coefficients, {n});
  }
  return res;
}

IdentityReport pm_check_consistency(const PMPresentation& pres) {
  const auto as = generators(pres, true);
  const auto bs = generators(pres, false);
  struct Family {
    const char* name;
    const std::vector<Generator>* g1;
    const std::vector<Generator>* g2;
    const std::vector<Generator>* g3;
  };
  const Family families[] = {{"AAA associativity", &as, &as, &as},
                             {"BBB associativity", &bs, &bs, &bs},
                             {"BAA associativity", &bs, &as, &as},
                             {"BBA associativity", &bs, &bs, &as}};
  IdentityReport report;
  for (const auto& f : families) {
    Residual res;
    res.identity = f.name;
    for (const auto& x : *f.g1)
      for (const auto& y : *f.g2) {
        if (y.from != x.to) continue;
        const PMUElement xy = pm_u_multiply(x.element(), y.element(), pres);
        for (const auto& z : *f.g3) {
          if (z.from != y.to) continue;
          const PMUElement left = pm_u_multiply(xy, z.element(), pres);
          const PMUElement right = pm_u_multiply(x.element(), pm_u_multiply(y.element(), z.element(), pres), pres);
          absorb_element(res, left - right,
                         {x.from, x.to, x.index, y.from, y.to, y.index, z.from, z.to, z.index});
        }
      }
    report.families.push_back(std::move(res));
  }
  return report;
}

namespace {

// Right-hand sides of the stored C actions.
PMUElement stored_c_times_a(const PMPresentation& pres, std::size_t a, std::size_t b, std::size_t j) {
  PMUElement rhs;
  for (std::size_t k = 0; k < pres.count(b, a); ++k) rhs += pres.mu(a, b, j, k) * pm_b(a, b, k);
  for (std::size_t l = 0; l < pres.count(a, b); ++l) rhs += pres.act_a(a, b, j, l) * pm_a(a, b, l);
  if (a == b) rhs += pres.unit_a(a, j) * pm_idempotent(a);
  return rhs;
}

PMUElement stored_b_times_c(const PMPresentation& pres, std::size_t a, std::size_t b, std::size_t j) {
  PMUElement rhs;
  for (std::size_t k = 0; k < pres.count(a, b); ++k) rhs += pres.lambda(b, a, k, j) * pm_a(a, b, k);
  for (std::size_t l = 0; l < pres.count(b, a); ++l) rhs += pres.act_b(a, b, j, l) * pm_b(a, b, l);
  if (a == b) rhs += pres.unit_b(a, j) * pm_idempotent(a);
  return rhs;
}

}  // namespace

Residual pm_check_K_central(const PMPresentation& pres) {
  Residual res;
  res.identity = "K centrality";
  if (!pres.has_c_actions()) return res;
  for (const auto& g : generators(pres, true)) {
    PMUElement lhs = pm_u_multiply(pm_c(pres, g.from), g.element(), pres);
    absorb_element(res, lhs - stored_c_times_a(pres, g.from, g.to, g.index), {0, g.from, g.to, g.index});
  }
  for (const auto& g : generators(pres, false)) {
    PMUElement lhs = pm_u_multiply(g.element(), pm_c(pres, g.to), pres);
    absorb_element(res, lhs - stored_b_times_c(pres, g.from, g.to, g.index), {1, g.from, g.to, g.index});
  }
  return res;
}

PMPresentation with_derived_c_actions(PMPresentation pres) {
  pres.enable_c_actions();
  const std::size_t m = pres.blocks();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t j = 0; j < pres.count(a, b); ++j) {
        PMUElement lhs = pm_u_multiply(pm_c(pres, a), pm_a(a, b, j), pres);
        for (std::size_t l = 0; l < pres.count(a, b); ++l)
          pres.act_a(a, b, j, l) = lhs.coefficient(Word{gen(a, b, l), unit_gen(b), 0});
        if (a == b) pres.unit_a(a, j) = lhs.coefficient(Word{unit_gen(a), unit_gen(a), 0});
      }
      for (std::size_t j = 0; j < pres.count(b, a); ++j) {
        PMUElement lhs = pm_u_multiply(pm_b(a, b, j), pm_c(pres, b), pres);
        for (std::size_t l = 0; l < pres.count(b, a); ++l)
          pres.act_b(a, b, j, l) = lhs.coefficient(Word{unit_gen(a), gen(a, b, l), 0});
        if (a == b) pres.unit_b(a, j) = lhs.coefficient(Word{unit_gen(a), unit_gen(a), 0});
      }
    }
  return pres;
}

PMPresentation with_centrality_actions(PMPresentation pres) {
  pres.enable_c_actions();
  const std::size_t m = pres.blocks();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      for (std::size_t j = 0; j < pres.count(a, b); ++j) {
        for (std::size_t s = 0; s < pres.count(a, b); ++s) {
          Scalar x = -pres.t(b, a, s, j);
          for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < pres.count(a, v); ++k)
              for (std::size_t r = 0; r < pres.count(v, b); ++r)
                x -= pres.psi(b, v, a, r, k, j) * pres.phi(a, v, b, k, r, s);
          pres.act_a(a, b, j, s) = x;
        }
        if (a != b) continue;
        Scalar u;
        for (std::size_t v = 0; v < m; ++v)
          for (std::size_t k = 0; k < pres.count(a, v); ++k)
            for (std::size_t r = 0; r < pres.count(v, a); ++r) u -= pres.psi(a, v, a, r, k, j) * pres.mu(a, v, k, r);
        pres.unit_a(a, j) = u;
      }
      for (std::size_t j = 0; j < pres.count(b, a); ++j) {
        for (std::size_t s = 0; s < pres.count(b, a); ++s) {
          Scalar x = -pres.t(a, b, j, s);
          for (std::size_t v = 0; v < m; ++v)
            for (std::size_t k = 0; k < pres.count(b, v); ++k)
              for (std::size_t r = 0; r < pres.count(v, a); ++r)
                x -= pres.phi(b, v, a, k, r, j) * pres.psi(a, v, b, r, k, s);
          pres.act_b(a, b, j, s) = x;
        }
        if (a != b) continue;
        Scalar u;
        for (std::size_t v = 0; v < m; ++v)
          for (std::size_t k = 0; k < pres.count(a, v); ++k)
            for (std::size_t r = 0; r < pres.count(v, a); ++r)
              u -= pres.phi(a, v, a, k, r, j) * pres.lambda(a, v, r, k);
        pres.unit_b(a, j) = u;
      }
    }
  return pres;
}

}  // namespace compat
