#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "stpsw/logical_matrix.hpp"
#include "stpsw/matrix.hpp"

namespace stpsw {

/// Row-major {0,1} matrix with Boolean sum, Boolean product and entrywise AND.
class BooleanMatrix {
 public:
  BooleanMatrix() = default;
  BooleanMatrix(std::size_t rows, std::size_t cols, bool fill = false);
  static BooleanMatrix from_rows(std::initializer_list<std::initializer_list<int>> rows);
  static BooleanMatrix from_logical(const LogicalMatrix& l);
  static BooleanMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool operator()(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }

  BooleanMatrix transpose() const;
  bool all_ones() const;
  bool any() const;
  bool row_all_ones(std::size_t r) const;
  bool col_all_ones(std::size_t c) const;
  std::size_t count() const;
  /// Exact 0/1 matrix in the requested numeric mode.
  Matrix to_matrix(NumericMode mode = NumericMode::Rational) const;

  std::string str() const;

  friend bool operator==(const BooleanMatrix&, const BooleanMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

/// [A ×_B B]_{ij} = 1 iff [AB]_{ij} > 0.
BooleanMatrix boolean_product(const BooleanMatrix& a, const BooleanMatrix& b);
/// Entrywise OR.
BooleanMatrix boolean_sum(const BooleanMatrix& a, const BooleanMatrix& b);
/// Entrywise AND.
BooleanMatrix logical_and(const BooleanMatrix& a, const BooleanMatrix& b);
/// A^(k) by repeated Boolean products; A^(0) = I.
BooleanMatrix boolean_power(const BooleanMatrix& a, std::size_t k);

}  // namespace stpsw
