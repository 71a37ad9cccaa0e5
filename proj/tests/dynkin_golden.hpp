#pragma once

#include <stdexcept>
#include <vector>

#include "compat/dynkin.hpp"

namespace testing {

using compat::DynkinFamily;
using compat::MultiplicityMatrix;

struct Golden {
  DynkinFamily family;
  std::size_t k;
  std::vector<std::vector<long>> a;
  std::vector<long> n, m;  // per column, per row
};

inline MultiplicityMatrix zeros(std::size_t r, std::size_t s) { return MultiplicityMatrix(r, s); }

// The affine list written out entry by entry, rows and columns 1-based as in
// the classification statement.
inline Golden golden(DynkinFamily family, std::size_t k) {
  switch (family) {
    case DynkinFamily::a1:
      return {family, 0, {{2}}, {1}, {1}};
    case DynkinFamily::a_odd: {
      auto a = zeros(k, k);
      for (std::size_t i = 0; i < k; ++i) {
        a(i, i) += 1;
        a(i, (i + 1) % k) += 1;
      }
      return {family, k, a.to_rows(), std::vector<long>(k, 1), std::vector<long>(k, 1)};
    }
    case DynkinFamily::e6:
      return {family, 0, {{1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 0, 1}}, {3, 1, 1, 1}, {2, 2, 2}};
    case DynkinFamily::d4:
      return {family, 0, {{1, 1, 1, 1}}, {1, 1, 1, 1}, {2}};
    case DynkinFamily::d_even: {
      auto a = zeros(k - 1, k + 2);
      auto set = [&](std::size_t i, std::size_t j) { a(i - 1, j - 1) = 1; };
      set(1, 1), set(1, 2), set(1, 3);
      for (std::size_t i = 2; i <= k - 2; ++i) set(i, i + 1), set(i, i + 2);
      set(k - 1, k), set(k - 1, k + 1), set(k - 1, k + 2);
      std::vector<long> n(k + 2, 2);
      n[0] = n[1] = n[k] = n[k + 1] = 1;
      return {family, k, a.to_rows(), n, std::vector<long>(k - 1, 2)};
    }
    case DynkinFamily::d_odd: {
      auto a = zeros(k, k);
      auto set = [&](std::size_t i, std::size_t j) { a(i - 1, j - 1) = 1; };
      set(1, 1), set(1, 2), set(1, 3);
      for (std::size_t i = 2; i <= k - 2; ++i) set(i, i + 1), set(i, i + 2);
      set(k - 1, k), set(k, k);
      std::vector<long> n(k, 2), m(k, 2);
      n[0] = n[1] = 1;
      m[k - 2] = m[k - 1] = 1;
      return {family, k, a.to_rows(), n, m};
    }
    case DynkinFamily::e7:
      return {family, 0, {{1, 1, 0, 0, 0}, {0, 1, 1, 1, 0}, {0, 0, 0, 1, 1}}, {1, 3, 2, 3, 1}, {2, 4, 2}};
    case DynkinFamily::e8:
      return {family,
              0,
              {{1, 0, 0, 0, 0}, {1, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}},
              {4, 3, 5, 3, 1},
              {2, 6, 4, 2}};
  }
  throw std::logic_error("unknown family");
}

inline std::vector<Golden> golden_table() {
  std::vector<Golden> out;
  for (auto f : {DynkinFamily::a1, DynkinFamily::d4, DynkinFamily::e6, DynkinFamily::e7, DynkinFamily::e8})
    out.push_back(golden(f, 0));
  for (std::size_t k = 2; k <= 6; ++k) out.push_back(golden(DynkinFamily::a_odd, k));
  for (std::size_t k = 3; k <= 6; ++k) {
    out.push_back(golden(DynkinFamily::d_even, k));
    out.push_back(golden(DynkinFamily::d_odd, k));
  }
  return out;
}

}  // namespace testing
