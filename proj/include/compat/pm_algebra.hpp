#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "compat/algebra.hpp"

namespace compat {

// Block presentation of the universal algebra of a PM-structure with m blocks.
// A[ab][i] spans the off-unit part of block (a,b) of the first subalgebra and
// B[ba][i] is its dual partner in the second one, so block (a,b) carries
// count(a,b) A-generators and count(b,a) B-generators. Relations:
//   A[ab][i] A[bc][j] = phi(a,b,c,i,j,k) A[ac][k] + [a=c] mu(a,b,i,j) e_a
//   B[ab][i] B[bc][j] = psi(a,b,c,i,j,k) B[ac][k] + [a=c] lambda(a,b,i,j) e_a
//   B[ab][i] A[bc][j] = phi(b,c,a,j,k,i) B[ac][k] + psi(c,a,b,k,i,j) A[ac][k]
//                       + [a=c] (t(a,b,i,j) e_a + [i=j] C_a)
// and, when present, the actions of C:
//   C_a A[ab][j] = mu(a,b,j,k) B[ab][k] + act_a(a,b,j,l) A[ab][l] + [a=b] unit_a(a,j) e_a
//   B[ab][j] C_b = lambda(b,a,k,j) A[ab][k] + act_b(a,b,j,l) B[ab][l] + [a=b] unit_b(a,j) e_a
// Repeated Latin indices are summed; Greek (block) indices never are.
class PMPresentation {
 public:
  PMPresentation() = default;
  explicit PMPresentation(std::vector<std::vector<std::size_t>> counts);

  std::size_t blocks() const { return m_; }
  std::size_t count(std::size_t a, std::size_t b) const { return counts_[a][b]; }
  const std::vector<std::vector<std::size_t>>& counts() const { return counts_; }

  Scalar& phi(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, std::size_t k) {
    return phi_[idx3(a, b, c, i, j, k)];
  }
  const Scalar& phi(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j,
                    std::size_t k) const {
    return phi_[idx3(a, b, c, i, j, k)];
  }
  Scalar& psi(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j, std::size_t k) {
    return psi_[idx3(a, b, c, i, j, k)];
  }
  const Scalar& psi(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j,
                    std::size_t k) const {
    return psi_[idx3(a, b, c, i, j, k)];
  }
  Scalar& mu(std::size_t a, std::size_t b, std::size_t i, std::size_t j) { return mu_[idx2(a, b, i, j)]; }
  const Scalar& mu(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return mu_[idx2(a, b, i, j)];
  }
  Scalar& lambda(std::size_t a, std::size_t b, std::size_t i, std::size_t j) { return lambda_[idx2(a, b, i, j)]; }
  const Scalar& lambda(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return lambda_[idx2(a, b, i, j)];
  }
  Scalar& t(std::size_t a, std::size_t b, std::size_t i, std::size_t j) { return t_[idx2(a, b, i, j)]; }
  const Scalar& t(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const { return t_[idx2(a, b, i, j)]; }

  bool has_c_actions() const { return has_c_; }
  // Switches the presentation to explicitly stored C actions, all zero.
  void enable_c_actions() { has_c_ = true; }
  Scalar& act_a(std::size_t a, std::size_t b, std::size_t j, std::size_t l) { return act_a_[idx2(a, b, j, l)]; }
  const Scalar& act_a(std::size_t a, std::size_t b, std::size_t j, std::size_t l) const {
    return act_a_[idx2(a, b, j, l)];
  }
  Scalar& act_b(std::size_t a, std::size_t b, std::size_t j, std::size_t l) { return act_b_[idx2(a, b, j, l)]; }
  const Scalar& act_b(std::size_t a, std::size_t b, std::size_t j, std::size_t l) const {
    return act_b_[idx2(a, b, j, l)];
  }
  Scalar& unit_a(std::size_t a, std::size_t j) { return unit_a_[a * w_ + j]; }
  const Scalar& unit_a(std::size_t a, std::size_t j) const { return unit_a_[a * w_ + j]; }
  Scalar& unit_b(std::size_t a, std::size_t j) { return unit_b_[a * w_ + j]; }
  const Scalar& unit_b(std::size_t a, std::size_t j) const { return unit_b_[a * w_ + j]; }

  // Every stored tensor entry equal.
  friend bool operator==(const PMPresentation& x, const PMPresentation& y);

 private:
  std::size_t idx2(std::size_t a, std::size_t b, std::size_t i, std::size_t j) const {
    return ((a * m_ + b) * w_ + i) * w_ + j;
  }
  std::size_t idx3(std::size_t a, std::size_t b, std::size_t c, std::size_t i, std::size_t j,
                   std::size_t k) const {
    return ((((a * m_ + b) * m_ + c) * w_ + i) * w_ + j) * w_ + k;
  }

  std::size_t m_ = 0;
  std::size_t w_ = 1;  // widest block, the stride of every Latin index
  std::vector<std::vector<std::size_t>> counts_;
  std::vector<Scalar> phi_, psi_, mu_, lambda_, t_;
  bool has_c_ = false;
  std::vector<Scalar> act_a_, act_b_, unit_a_, unit_b_;
};

// A generator A[from,to][index], B[from,to][index], or the idempotent e_from
// (index < 0, from == to).
struct Gen {
  int from = 0;
  int to = 0;
  int index = -1;
  bool is_unit() const { return index < 0; }
  auto operator<=>(const Gen&) const = default;
};

// Normal-form word a * b * K^power with a an A-generator or idempotent on the
// left and b a B-generator or idempotent on the right.
struct Word {
  Gen a;
  Gen b;
  int power = 0;
  std::size_t left() const { return static_cast<std::size_t>(a.from); }
  std::size_t right() const { return static_cast<std::size_t>(b.to); }
  auto operator<=>(const Word&) const = default;
};

class PMUElement {
 public:
  PMUElement() = default;
  static PMUElement word(const Word& w, const Scalar& coefficient = 1);

  const std::map<Word, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(const Word& w) const;
  void add(const Word& w, const Scalar& coefficient);
  int max_power() const;

  PMUElement& operator+=(const PMUElement& o);
  PMUElement& operator-=(const PMUElement& o);
  PMUElement& operator*=(const Scalar& s);
  friend PMUElement operator+(PMUElement x, const PMUElement& y) { return x += y; }
  friend PMUElement operator-(PMUElement x, const PMUElement& y) { return x -= y; }
  friend PMUElement operator*(const Scalar& s, PMUElement x) { return x *= s; }
  friend bool operator==(const PMUElement& x, const PMUElement& y) { return (x - y).is_zero(); }

  std::string str() const;

 private:
  std::map<Word, Scalar> terms_;  // no zero coefficients
};

PMUElement pm_unit(const PMPresentation& pres);
PMUElement pm_idempotent(std::size_t block);
PMUElement pm_a(std::size_t from, std::size_t to, std::size_t index);
PMUElement pm_b(std::size_t from, std::size_t to, std::size_t index);
PMUElement pm_k(std::size_t block, int power = 1);
// C_a = K_a - sum over blocks v and i of A[av][i] B[va][i].
PMUElement pm_c(const PMPresentation& pres, std::size_t block);

// Normal form of the product, K treated as central.
PMUElement pm_u_multiply(const PMUElement& x, const PMUElement& y, const PMPresentation& pres);

// Every normal-form word with K power at most max_power.
std::vector<Word> pm_basis_words(const PMPresentation& pres, int max_power);
// Combination of `terms` random basis words with integer coefficients in [-3, 3].
PMUElement pm_random_element(const PMPresentation& pres, std::mt19937_64& rng, int max_power, std::size_t terms = 3);
// (xy)z - x(yz) on random triples; the witness is the number of the failing sample.
Residual pm_sampled_associativity(const PMPresentation& pres, std::mt19937_64& rng, std::size_t samples,
                                  int max_power);

// Associativity of the normal-form product on all generator triples whose
// associator is not trivially zero (AAA, BBB, BAA, BBA).
IdentityReport pm_check_consistency(const PMPresentation& pres);

// With C eliminated through K, compares C_a g and g C_b for every generator g
// against the stored actions. Without stored actions the check is vacuous.
Residual pm_check_K_central(const PMPresentation& pres);

// Fills in the C actions forced by centrality of K, read off the normal form.
PMPresentation with_derived_c_actions(PMPresentation pres);

// The same actions in closed form:
//   act_a(a,b,j,s) = -t(b,a,s,j) - psi(b,v,a,r,k,j) phi(a,v,b,k,r,s)
//   act_b(a,b,j,s) = -t(a,b,j,s) - phi(b,v,a,k,r,j) psi(a,v,b,r,k,s)
//   unit_a(a,j) = -psi(a,v,a,r,k,j) mu(a,v,k,r),  unit_b(a,j) = -phi(a,v,a,k,r,j) lambda(a,v,r,k)
// with v summed over blocks here.
PMPresentation with_centrality_actions(PMPresentation pres);

}  // namespace compat
