#include "stpsw/matrix.hpp"

#include <atomic>
#include <cmath>
#include <limits>
#include <sstream>

namespace stpsw {

namespace {
std::atomic<std::size_t> g_max_entries{10'000'000};

template <class T>
Dense<T> zeros(std::size_t r, std::size_t c) {
  return Dense<T>{r, c, std::vector<T>(r * c, T(0))};
}

Matrix::Storage make_storage(std::size_t r, std::size_t c, NumericMode mode) {
  if (mode == NumericMode::Rational) return zeros<Rational>(r, c);
  return zeros<double>(r, c);
}

template <class T>
T from_scalar(const Scalar& s);
template <>
Rational from_scalar<Rational>(const Scalar& s) {
  if (s.mode() != NumericMode::Rational) throw ModeMismatch("float scalar stored into rational matrix");
  return s.rational();
}
template <>
double from_scalar<double>(const Scalar& s) {
  if (s.mode() != NumericMode::Float) throw ModeMismatch("rational scalar stored into float matrix");
  return s.to_double();
}

double abs_value(const Rational& v) { return std::fabs(v.get_d()); }
double abs_value(double v) { return std::fabs(v); }
}  // namespace

std::size_t max_entries() noexcept { return g_max_entries.load(std::memory_order_relaxed); }
void set_max_entries(std::size_t cap) noexcept { g_max_entries.store(cap, std::memory_order_relaxed); }

void check_size(std::size_t rows, std::size_t cols, const char* what) {
  if (rows != 0 && cols > std::numeric_limits<std::size_t>::max() / rows)
    throw SizingError(std::string(what) + ": result dimensions overflow");
  if (rows * cols > max_entries()) {
    std::ostringstream os;
    os << what << ": result " << rows << "x" << cols << " exceeds the cap of " << max_entries() << " entries";
    throw SizingError(os.str());
  }
}

Matrix::Matrix(std::size_t rows, std::size_t cols, NumericMode mode) : storage_(make_storage(rows, cols, mode)) {}

Matrix::Matrix(Storage storage) : storage_(std::move(storage)) {
  std::visit(
      [](const auto& d) {
        if (d.values.size() != d.rows * d.cols) throw DimensionError("matrix storage size does not match its shape");
      },
      storage_);
}

Matrix Matrix::identity(std::size_t n, NumericMode mode) {
  Matrix m(n, n, mode);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, Scalar::one(mode));
  return m;
}

Matrix Matrix::basis_vector(std::size_t n, std::size_t i, NumericMode mode) {
  if (i < 1 || i > n) throw IndexError("basis vector index out of range");
  Matrix m(n, 1, mode);
  m.set(i - 1, 0, Scalar::one(mode));
  return m;
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<long>> rows, NumericMode mode) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.begin()->size() : 0;
  Matrix m(r, c, mode);
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("ragged row list");
    std::size_t j = 0;
    for (long v : row) m.set(i, j++, Scalar(Rational(v)).converted(mode));
    ++i;
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows.front().size() : cols_if_empty;
  NumericMode mode = (r && c) ? rows.front().front().mode() : NumericMode::Rational;
  Matrix m(r, c, mode);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged row list");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(const std::vector<Scalar>& entries) {
  std::vector<std::vector<Scalar>> rows;
  rows.reserve(entries.size());
  for (const auto& e : entries) rows.push_back({e});
  return from_rows(rows, 1);
}

std::size_t Matrix::rows() const noexcept {
  return std::visit([](const auto& d) { return d.rows; }, storage_);
}
std::size_t Matrix::cols() const noexcept {
  return std::visit([](const auto& d) { return d.cols; }, storage_);
}

Scalar Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows() || c >= cols()) throw IndexError("matrix entry out of range");
  return std::visit([&](const auto& d) { return Scalar(d(r, c)); }, storage_);
}

void Matrix::set(std::size_t r, std::size_t c, const Scalar& v) {
  if (r >= rows() || c >= cols()) throw IndexError("matrix entry out of range");
  std::visit(
      [&](auto& d) {
        using T = typename std::decay_t<decltype(d.values)>::value_type;
        d(r, c) = from_scalar<T>(v);
      },
      storage_);
}

bool Matrix::is_zero() const {
  return std::visit(
      [](const auto& d) {
        for (const auto& v : d.values)
          if (!stpsw::is_zero(v)) return false;
        return true;
      },
      storage_);
}

double Matrix::max_abs() const {
  return std::visit(
      [](const auto& d) {
        double m = 0.0;
        for (const auto& v : d.values) m = std::max(m, abs_value(v));
        return m;
      },
      storage_);
}

Matrix Matrix::transpose() const {
  return Matrix(std::visit(
      [](const auto& d) -> Storage {
        using T = typename std::decay_t<decltype(d.values)>::value_type;
        auto t = zeros<T>(d.cols, d.rows);
        for (std::size_t i = 0; i < d.rows; ++i)
          for (std::size_t j = 0; j < d.cols; ++j) t(j, i) = d(i, j);
        return t;
      },
      storage_));
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const {
  if (r0 + h > rows() || c0 + w > cols()) throw DimensionError("block exceeds matrix bounds");
  return Matrix(std::visit(
      [&](const auto& d) -> Storage {
        using T = typename std::decay_t<decltype(d.values)>::value_type;
        auto b = zeros<T>(h, w);
        for (std::size_t i = 0; i < h; ++i)
          for (std::size_t j = 0; j < w; ++j) b(i, j) = d(r0 + i, c0 + j);
        return b;
      },
      storage_));
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows() || c0 + b.cols() > cols()) throw DimensionError("block exceeds matrix bounds");
  if (b.mode() != mode()) throw ModeMismatch("block uses a different numeric mode");
  std::visit(
      [&](auto& d) {
        using D = std::decay_t<decltype(d)>;
        const auto& s = std::get<D>(b.storage());
        for (std::size_t i = 0; i < s.rows; ++i)
          for (std::size_t j = 0; j < s.cols; ++j) d(r0 + i, c0 + j) = s(i, j);
      },
      storage_);
}

Matrix Matrix::converted(NumericMode target) const {
  if (target == mode()) return *this;
  if (target == NumericMode::Float) {
    const auto& d = std::get<Dense<Rational>>(storage_);
    Dense<double> out{d.rows, d.cols, {}};
    out.values.reserve(d.values.size());
    for (const auto& v : d.values) out.values.push_back(v.get_d());
    return Matrix(std::move(out));
  }
  const auto& d = std::get<Dense<double>>(storage_);
  Dense<Rational> out{d.rows, d.cols, {}};
  out.values.reserve(d.values.size());
  for (double v : d.values) out.values.emplace_back(v);
  return Matrix(std::move(out));
}

Matrix Matrix::scaled(const Scalar& s) const {
  Matrix out = *this;
  std::visit(
      [&](auto& d) {
        using T = typename std::decay_t<decltype(d.values)>::value_type;
        T f = from_scalar<T>(s);
        for (auto& v : d.values) v *= f;
      },
      out.storage_);
  return out;
}

std::string Matrix::str() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows(); ++i) {
    if (i) os << "; ";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (j) os << ' ';
      os << at(i, j).str();
    }
  }
  return os.str();
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  check_size(a.rows(), b.cols(), "matrix product");
  return Matrix(visit_same(a, b, [](const auto& x, const auto& y) -> Matrix::Storage {
    using T = typename std::decay_t<decltype(x.values)>::value_type;
    // Nonzero pattern of y per row; the STP and merged-system operands are mostly zero.
    std::vector<std::vector<std::size_t>> nz(y.rows);
    for (std::size_t k = 0; k < y.rows; ++k)
      for (std::size_t j = 0; j < y.cols; ++j)
        if (!stpsw::is_zero(y(k, j))) nz[k].push_back(j);
    auto c = zeros<T>(x.rows, y.cols);
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t k = 0; k < x.cols; ++k) {
        const T& aik = x(i, k);
        if (stpsw::is_zero(aik)) continue;
        for (std::size_t j : nz[k]) c(i, j) += aik * y(k, j);
      }
    return c;
  }));
}

namespace {
template <class Op>
Matrix elementwise(const Matrix& a, const Matrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionError("elementwise operation: shapes differ");
  return Matrix(visit_same(a, b, [&](const auto& x, const auto& y) -> Matrix::Storage {
    auto c = x;
    for (std::size_t i = 0; i < c.values.size(); ++i) c.values[i] = op(x.values[i], y.values[i]);
    return c;
  }));
}
}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x + y); });
}
Matrix operator-(const Matrix& a, const Matrix& b) {
  return elementwise(a, b, [](const auto& x, const auto& y) { return std::decay_t<decltype(x)>(x - y); });
}

bool operator==(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.mode() != b.mode()) return false;
  return visit_same(a, b, [](const auto& x, const auto& y) {
    for (std::size_t i = 0; i < x.values.size(); ++i)
      if (!stpsw::is_zero(x.values[i] - y.values[i])) return false;
    return true;
  });
}

Matrix hconcat(std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix();
  std::size_t r = parts.front().rows(), c = 0;
  for (const auto& p : parts) {
    if (p.rows() != r) throw DimensionError("hconcat: row counts differ");
    c += p.cols();
  }
  Matrix out(r, c, parts.front().mode());
  std::size_t off = 0;
  for (const auto& p : parts) {
    out.set_block(0, off, p);
    off += p.cols();
  }
  return out;
}

Matrix vconcat(std::span<const Matrix> parts) {
  if (parts.empty()) return Matrix();
  std::size_t c = parts.front().cols(), r = 0;
  for (const auto& p : parts) {
    if (p.cols() != c) throw DimensionError("vconcat: column counts differ");
    r += p.rows();
  }
  Matrix out(r, c, parts.front().mode());
  std::size_t off = 0;
  for (const auto& p : parts) {
    out.set_block(off, 0, p);
    off += p.rows();
  }
  return out;
}

}  // namespace stpsw
