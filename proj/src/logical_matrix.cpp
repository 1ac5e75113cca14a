#include "stpsw/logical_matrix.hpp"

#include <sstream>

namespace stpsw {

LogicalMatrix::LogicalMatrix(std::size_t rows, std::vector<std::size_t> col_index)
    : rows_(rows), col_index_(std::move(col_index)) {
  if (rows_ == 0) throw DimensionError("logical matrix needs at least one row");
  for (std::size_t i : col_index_)
    if (i < 1 || i > rows_) throw IndexError("logical matrix column index outside [1, rows]");
}

LogicalMatrix LogicalMatrix::identity(std::size_t n) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i + 1;
  return LogicalMatrix(n, std::move(idx));
}

LogicalMatrix LogicalMatrix::from_dense(const Matrix& m) {
  std::vector<std::size_t> idx(m.cols());
  Scalar one = Scalar::one(m.mode());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    std::size_t found = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      Scalar v = m.at(i, j);
      if (v.is_zero()) continue;
      if (!(v == one) || found) throw DimensionError("column is not a canonical basis vector");
      found = i + 1;
    }
    if (!found) throw DimensionError("column is not a canonical basis vector");
    idx[j] = found;
  }
  return LogicalMatrix(m.rows(), std::move(idx));
}

Matrix LogicalMatrix::dense(NumericMode mode) const {
  Matrix m(rows_, cols(), mode);
  Scalar one = Scalar::one(mode);
  for (std::size_t j = 0; j < cols(); ++j) m.set(col_index_[j] - 1, j, one);
  return m;
}

LogicalMatrix LogicalMatrix::columns(std::size_t first, std::size_t count) const {
  if (first < 1 || first - 1 + count > cols()) throw IndexError("logical matrix column range out of bounds");
  auto begin = col_index_.begin() + static_cast<std::ptrdiff_t>(first - 1);
  return LogicalMatrix(rows_, std::vector<std::size_t>(begin, begin + static_cast<std::ptrdiff_t>(count)));
}

std::string LogicalMatrix::str() const {
  std::ostringstream os;
  os << "δ_" << rows_ << "[";
  for (std::size_t j = 0; j < col_index_.size(); ++j) os << (j ? "," : "") << col_index_[j];
  os << "]";
  return os.str();
}

LogicalMatrix compose(const LogicalMatrix& a, const LogicalMatrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("logical product: inner dimensions differ");
  std::vector<std::size_t> idx(b.cols());
  for (std::size_t j = 1; j <= b.cols(); ++j) idx[j - 1] = a[b[j]];
  return LogicalMatrix(a.rows(), std::move(idx));
}

LogicalMatrix khatri_rao(const LogicalMatrix& a, const LogicalMatrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("khatri_rao: column counts differ");
  std::vector<std::size_t> idx(a.cols());
  for (std::size_t j = 1; j <= a.cols(); ++j) idx[j - 1] = (a[j] - 1) * b.rows() + b[j];
  return LogicalMatrix(a.rows() * b.rows(), std::move(idx));
}

LogicalMatrix swap_matrix(std::size_t m, std::size_t n) {
  if (m == 0 || n == 0) throw DimensionError("swap matrix dimensions must be positive");
  // Column (i-1)n + j maps δ_m^i ⋉ δ_n^j to δ_n^j ⋉ δ_m^i = δ_{mn}^{(j-1)m + i}.
  std::vector<std::size_t> idx(m * n);
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= n; ++j) idx[(i - 1) * n + j - 1] = (j - 1) * m + i;
  return LogicalMatrix(m * n, std::move(idx));
}

LogicalMatrix power_reducing_matrix(std::size_t n) {
  if (n == 0) throw DimensionError("power-reducing matrix dimension must be positive");
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 1; i <= n; ++i) idx[i - 1] = (i - 1) * n + i;
  return LogicalMatrix(n * n, std::move(idx));
}

}  // namespace stpsw
