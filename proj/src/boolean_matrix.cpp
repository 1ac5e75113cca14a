#include "stpsw/boolean_matrix.hpp"

#include <algorithm>
#include <sstream>

namespace stpsw {

BooleanMatrix::BooleanMatrix(std::size_t rows, std::size_t cols, bool fill)
    : rows_(rows), cols_(cols), bits_(rows * cols, fill ? 1 : 0) {}

BooleanMatrix BooleanMatrix::from_rows(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  BooleanMatrix m(r, c);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    std::size_t j = 0;
    for (int v : row) {
      if (v != 0 && v != 1) throw std::invalid_argument("Boolean matrix entries must be 0 or 1");
      m.set(i, j++, v == 1);
    }
    ++i;
  }
  return m;
}

BooleanMatrix BooleanMatrix::from_logical(const LogicalMatrix& l) {
  BooleanMatrix m(l.rows(), l.cols());
  for (std::size_t j = 1; j <= l.cols(); ++j) m.set(l[j] - 1, j - 1, true);
  return m;
}

BooleanMatrix BooleanMatrix::identity(std::size_t n) {
  BooleanMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
  return m;
}

BooleanMatrix BooleanMatrix::transpose() const {
  BooleanMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.set(j, i, (*this)(i, j));
  return t;
}

bool BooleanMatrix::all_ones() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}
bool BooleanMatrix::any() const {
  return std::any_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
}
bool BooleanMatrix::row_all_ones(std::size_t r) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (!(*this)(r, j)) return false;
  return true;
}
bool BooleanMatrix::col_all_ones(std::size_t c) const {
  for (std::size_t i = 0; i < rows_; ++i)
    if (!(*this)(i, c)) return false;
  return true;
}
std::size_t BooleanMatrix::count() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

Matrix BooleanMatrix::to_matrix(NumericMode mode) const {
  Matrix m(rows_, cols_, mode);
  Scalar one = Scalar::one(mode);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j)) m.set(i, j, one);
  return m;
}

std::string BooleanMatrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << ((*this)(i, j) ? 1 : 0);
  }
  return os.str();
}

BooleanMatrix boolean_product(const BooleanMatrix& a, const BooleanMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("Boolean product: inner dimensions differ");
  BooleanMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (!a(i, k)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j)) c.set(i, j, true);
    }
  return c;
}

namespace {
template <class Op>
BooleanMatrix entrywise(const BooleanMatrix& a, const BooleanMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("Boolean entrywise op: shapes differ");
  BooleanMatrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.set(i, j, op(a(i, j), b(i, j)));
  return c;
}
}  // namespace

BooleanMatrix boolean_sum(const BooleanMatrix& a, const BooleanMatrix& b) {
  return entrywise(a, b, [](bool x, bool y) { return x || y; });
}
BooleanMatrix logical_and(const BooleanMatrix& a, const BooleanMatrix& b) {
  return entrywise(a, b, [](bool x, bool y) { return x && y; });
}

BooleanMatrix boolean_power(const BooleanMatrix& a, std::size_t k) {
  if (a.rows() != a.cols()) throw DimensionError("Boolean power of a non-square matrix");
  BooleanMatrix p = BooleanMatrix::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) p = boolean_product(a, p);
  return p;
}

}  // namespace stpsw
