#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "stpsw/matrix.hpp"

namespace stpsw {

/// A matrix in L_{m x n}, stored as the 1-based row index of the single 1 in each column:
/// δ_m[i_1, ..., i_n].
class LogicalMatrix {
 public:
  LogicalMatrix() = default;
  LogicalMatrix(std::size_t rows, std::vector<std::size_t> col_index);
  LogicalMatrix(std::size_t rows, std::initializer_list<std::size_t> col_index)
      : LogicalMatrix(rows, std::vector<std::size_t>(col_index)) {}

  static LogicalMatrix identity(std::size_t n);
  /// Recovers the column indices of a dense 0/1 matrix; throws if some column is not a basis vector.
  static LogicalMatrix from_dense(const Matrix& m);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return col_index_.size(); }
  /// Row of the 1 in column j (both 1-based).
  std::size_t operator[](std::size_t j) const { return col_index_[j - 1]; }
  const std::vector<std::size_t>& col_index() const noexcept { return col_index_; }

  Matrix dense(NumericMode mode = NumericMode::Rational) const;
  /// Columns [first, first + count) as a new logical matrix (first is 1-based).
  LogicalMatrix columns(std::size_t first, std::size_t count) const;

  /// "δ_m[i1,i2,...]"
  std::string str() const;

  friend bool operator==(const LogicalMatrix&, const LogicalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<std::size_t> col_index_;
};

/// Ordinary product of logical matrices, itself logical.
LogicalMatrix compose(const LogicalMatrix& a, const LogicalMatrix& b);

/// Column-wise Kronecker product in index form.
LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b);

/// W_[m,n] = [I_n ⊗ δ_m^1, ..., I_n ⊗ δ_m^m]; satisfies W (x ⋉ y) = y ⋉ x for x ∈ Δ_m, y ∈ Δ_n.
LogicalMatrix swap_matrix(std::size_t m, std::size_t n);

/// Φ_n = δ_{n²}[1, n+2, 2n+3, ..., n²]; Φ_n x = x ⋉ x for x ∈ Δ_n.
LogicalMatrix power_reducing_matrix(std::size_t n);

}  // namespace stpsw
