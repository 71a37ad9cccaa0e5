#pragma once

#include <utility>
#include <vector>

#include "compat/algebra.hpp"

namespace compat::detail {

// Dense accumulator that remembers which slots were touched.
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : values_(n), touched_(n, false) {}
  void add(std::size_t k, const Scalar& v) {
    values_[k] += v;
    if (!touched_[k]) {
      touched_[k] = true;
      used_.push_back(k);
    }
  }
  void clear() {
    for (auto k : used_) {
      values_[k] = Scalar();
      touched_[k] = false;
    }
    used_.clear();
  }
  std::span<const Scalar> values() const { return values_; }

 private:
  Vector values_;
  std::vector<bool> touched_;
  std::vector<std::size_t> used_;
};

// Nonzero entries of e_i e_j for every pair (i, j).
class SparseTable {
 public:
  explicit SparseTable(const StructureConstants& sc) : d_(sc.dim()), rows_(d_ * d_) {
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k)
          if (!sc.at(i, j, k).is_zero()) rows_[i * d_ + j].emplace_back(k, sc.at(i, j, k));
  }
  const std::vector<std::pair<std::size_t, Scalar>>& row(std::size_t i, std::size_t j) const {
    return rows_[i * d_ + j];
  }
  // acc += sign * (e_i [this] e_j) [outer] e_k
  void add_left(Accumulator& acc, const SparseTable& outer, std::size_t i, std::size_t j, std::size_t k,
                int sign) const {
    for (const auto& [l, a] : row(i, j))
      for (const auto& [m, b] : outer.row(l, k)) acc.add(m, sign > 0 ? a * b : -(a * b));
  }
  // acc += sign * e_i [this] (e_j [inner] e_k)
  void add_right(Accumulator& acc, const SparseTable& inner, std::size_t i, std::size_t j, std::size_t k,
                 int sign) const {
    for (const auto& [l, a] : inner.row(j, k))
      for (const auto& [m, b] : row(i, l)) acc.add(m, sign > 0 ? a * b : -(a * b));
  }

 private:
  std::size_t d_;
  std::vector<std::vector<std::pair<std::size_t, Scalar>>> rows_;
};

}  // namespace compat::detail
