#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "compat/scalar.hpp"

namespace compat {

// Dense scalar tensor with fixed rank and row-major layout.
template <std::size_t Rank>
class Tensor {
 public:
  Tensor() { extents_.fill(0); }
  explicit Tensor(std::array<std::size_t, Rank> extents) : extents_(extents) {
    std::size_t n = 1;
    for (auto e : extents_) n *= e;
    data_.resize(n);
  }
  // Cube (or square) with every extent equal to n.
  static Tensor uniform(std::size_t n) {
    std::array<std::size_t, Rank> e;
    e.fill(n);
    return Tensor(e);
  }

  const std::array<std::size_t, Rank>& extents() const { return extents_; }
  std::size_t extent(std::size_t axis) const { return extents_[axis]; }
  std::size_t size() const { return data_.size(); }
  const std::vector<Scalar>& data() const { return data_; }

  template <class... I>
  Scalar& operator()(I... idx) {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }
  template <class... I>
  const Scalar& operator()(I... idx) const {
    return data_[offset({static_cast<std::size_t>(idx)...})];
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }
  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.extents_ != b.extents_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k)
      if (!(a.data_[k] == b.data_[k])) return false;
    return true;
  }

 private:
  std::size_t offset(std::array<std::size_t, Rank> idx) const {
    std::size_t off = 0;
    for (std::size_t a = 0; a < Rank; ++a) {
      if (idx[a] >= extents_[a]) throw std::out_of_range("tensor index out of range");
      off = off * extents_[a] + idx[a];
    }
    return off;
  }

  std::array<std::size_t, Rank> extents_;
  std::vector<Scalar> data_;
};

using Tensor2 = Tensor<2>;
using Tensor3 = Tensor<3>;

}  // namespace compat
