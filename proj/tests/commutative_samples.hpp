#pragma once

#include <algorithm>
#include <random>

#include "compat/commutative.hpp"
#include "support.hpp"

namespace testing {

using compat::CommutativeData;
using compat::Matrix;
using compat::Scalar;
using compat::StructureConstants;
using compat::Vector;

inline CommutativeData make(const Vector& u, const Vector& v, const std::vector<std::vector<Scalar>>& q) {
  return {u, v, Matrix::from_rows(q)};
}

// Unity at 0, B^i at i + 1, products straight from the defining relations.
inline StructureConstants b_algebra_oracle(const CommutativeData& d) {
  const std::size_t p = d.size();
  StructureConstants sc(p + 1);
  sc.at(0, 0, 0) = 1;
  for (std::size_t i = 0; i < p; ++i) {
    sc.at(0, i + 1, i + 1) = 1;
    sc.at(i + 1, 0, i + 1) = 1;
    for (std::size_t j = 0; j < p; ++j) {
      if (i == j) {
        sc.at(i + 1, i + 1, i + 1) = d.u[i];
      } else {
        sc.at(i + 1, j + 1, i + 1) = d.u[i] - d.q(i, j);
        sc.at(i + 1, j + 1, j + 1) = d.q(i, j);
      }
      sc.at(i + 1, j + 1, 0) = d.v[i];
    }
  }
  return sc;
}

inline bool oracle_valid(const CommutativeData& d) { return naive_associative(b_algebra_oracle(d)); }

inline CommutativeData regular(const Vector& u, const Scalar& tau) {
  const std::size_t p = u.size();
  CommutativeData d{u, Vector(p), Matrix(p, p)};
  for (std::size_t i = 0; i < p; ++i) {
    d.v[i] = tau * tau + u[i] * tau;
    for (std::size_t j = 0; j < p; ++j)
      if (i != j) d.q(i, j) = u[i] + tau;
  }
  return d;
}

inline CommutativeData commutative_example(std::size_t p) {
  CommutativeData d{Vector(p), Vector(p, Scalar(1)), Matrix(p, p)};
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j)
      if (i != j) d.q(i, j) = i > j ? 1 : -1;
  return d;
}

inline CommutativeData mat2_example(const Scalar& a, const Scalar& b, const Scalar& c) {
  // q21 = q31 = a, q12 = q32 = b, q13 = q23 = c
  return make({b + c, a + c, a + b}, {-(b * c), -(a * c), -(a * b)}, {{0, b, c}, {a, 0, c}, {a, b, 0}});
}

// Random solutions with at least three distinct u among four generators: v is
// pinned through roots of the quadratic, q between classes is forced, q inside
// a class is one of the two roots. Rejection on associativity.
inline CommutativeData sample_three_class(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> pick(-6, 6);
  std::bernoulli_distribution coin;
  for (;;) {
    Vector values;
    while (values.size() < 4) {
      const Scalar x = pick(rng);
      if (std::find(values.begin(), values.end(), x) == values.end()) values.push_back(x);
    }
    Vector u{values[0], values[1], values[2], coin(rng) ? values[3] : values[std::uniform_int_distribution<int>(0, 2)(rng)]};
    std::shuffle(u.begin(), u.end(), rng);
    const std::size_t p = 4;
    CommutativeData d{u, Vector(p), Matrix(p, p)};
    // Root y of v_i = y^2 - u_i y for every i, fixed relative to generator 0.
    Vector y(p);
    const Scalar x = random_fraction(rng);
    d.v[0] = x * x - u[0] * x;
    y[0] = u[0] - x;
    for (std::size_t j = 1; j < p; ++j) {
      if (u[j] == u[0]) {
        d.v[j] = d.v[0];
        y[j] = y[0];
        continue;
      }
      const Scalar q0j = coin(rng) ? x : u[0] - x;
      y[j] = u[0] - q0j;
      d.v[j] = y[j] * y[j] - u[j] * y[j];
    }
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) {
        if (i == j) continue;
        if (u[i] == u[j]) {
          d.q(i, j) = coin(rng) ? y[i] : u[i] - y[i];
        } else {
          d.q(i, j) = u[i] + (d.v[i] - d.v[j]) / (u[i] - u[j]);
        }
      }
    if (oracle_valid(d)) return d;
  }
}

}  // namespace testing
