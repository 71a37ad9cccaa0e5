#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "compat/matrix.hpp"

namespace compat {

// r x s matrix of nonnegative integers.
class MultiplicityMatrix {
 public:
  MultiplicityMatrix() = default;
  MultiplicityMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  // Throws on ragged rows or negative entries.
  static MultiplicityMatrix from_rows(const std::vector<std::vector<long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  MultiplicityMatrix transpose() const;
  MultiplicityMatrix permuted(const std::vector<std::size_t>& row_order, const std::vector<std::size_t>& col_order) const;
  std::vector<std::vector<long>> to_rows() const;
  friend bool operator==(const MultiplicityMatrix&, const MultiplicityMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<long> a_;
};

// Connectivity of the bipartite graph with an edge (i, j) whenever a(i,j) > 0.
// When disconnected, rows/cols hold the component of the first vertex.
struct Decomposition {
  bool decomposable = false;
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
Decomposition is_decomposable(const MultiplicityMatrix& a);

// Positive solution of sum_j a(i,j) n_j = 2 m_i and sum_i a(i,j) m_i = 2 n_j,
// scaled to coprime integers. None unless the solutions form a single line
// through a strictly positive vector.
struct AdmissibleSolution {
  std::vector<long> m;  // per row
  std::vector<long> n;  // per column
  friend bool operator==(const AdmissibleSolution&, const AdmissibleSolution&) = default;
};
std::optional<AdmissibleSolution> solve_adm(const MultiplicityMatrix& a);
bool is_admissible(const MultiplicityMatrix& a);

// Rows first: (v_i, v_j) = (w_i, w_j) = 2 delta_ij and (v_i, w_j) = -a(i,j).
Matrix gram_matrix(const MultiplicityMatrix& a);
// Exact symmetric elimination with diagonal pivots.
bool is_positive_semidefinite(const Matrix& symmetric);

enum class DynkinFamily { a1, a_odd, d4, d_even, d_odd, e6, e7, e8 };

struct DiagramID {
  DynkinFamily family = DynkinFamily::a1;
  std::size_t k = 0;         // only for a_odd, d_even and d_odd
  bool transposed = false;   // the input is the transpose of the catalog matrix
  friend bool operator==(const DiagramID&, const DiagramID&) = default;
};
// Names such as "A~1", "A~5", "D~8", "E~7".
std::string diagram_name(const DiagramID& id);
// Parses the family tags "A1", "A2k-1", "D4", "D2k", "D2k-1", "E6", "E7", "E8".
DynkinFamily parse_family(const std::string& tag);
std::string family_tag(DynkinFamily family);

struct CatalogEntry {
  MultiplicityMatrix matrix;
  AdmissibleSolution dims;  // at the smallest scale
};
// k is ignored for the families without a parameter. Throws if k is out of
// range: k >= 2 for a_odd, k >= 3 for d_even and d_odd.
CatalogEntry catalog(DynkinFamily family, std::size_t k = 0);

struct Classification {
  DiagramID id;
  AdmissibleSolution dims;  // of the input matrix
};
// Matches the input against the catalog up to row and column permutations and
// transposition. None if the matrix is not admissible.
std::optional<Classification> classify(const MultiplicityMatrix& a);

}  // namespace compat
