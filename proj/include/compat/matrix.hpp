#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "compat/scalar.hpp"

namespace compat {

// Dense row-major matrix over Scalar.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix unit(std::size_t n, std::size_t i, std::size_t j);  // e_{ij}
  static Matrix diagonal(std::span<const Scalar> entries);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows);
  static Matrix column(std::span<const Scalar> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const Scalar> data() const { return data_; }

  // Row-major flattening, the coordinates of a matrix in the unit basis.
  Vector flatten() const { return data_; }
  static Matrix unflatten(std::span<const Scalar> v, std::size_t rows, std::size_t cols);

  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator-(const Matrix& a);

// Reduced row echelon form with first-nonzero pivoting.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
// Basis of {x : m x = 0}.
std::vector<Vector> nullspace(const Matrix& m);
// Some solution of m x = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);
std::optional<Matrix> inverse(const Matrix& m);
Scalar determinant(const Matrix& m);

// Stacks vectors as the columns of a matrix.
Matrix columns(const std::vector<Vector>& cols, std::size_t height);

bool is_zero(std::span<const Scalar> v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& s, const Vector& a);
Vector zero_vector(std::size_t n);
Vector basis_vector(std::size_t n, std::size_t i);

}  // namespace compat
