#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "stpsw/errors.hpp"
#include "stpsw/scalar.hpp"

namespace stpsw {

/// Row-major dense grid of one scalar type.
template <class T>
struct Dense {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<T> values;

  T& operator()(std::size_t r, std::size_t c) { return values[r * cols + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return values[r * cols + c]; }
};

/// Upper bound on entries of any product-style result (STP, Kronecker, multiply).
std::size_t max_entries() noexcept;
void set_max_entries(std::size_t cap) noexcept;
/// Throws SizingError when rows * cols exceeds max_entries() (or overflows).
void check_size(std::size_t rows, std::size_t cols, const char* what);

/// Dense real matrix whose entries all share one numeric mode.
class Matrix {
 public:
  using Storage = std::variant<Dense<Rational>, Dense<double>>;

  Matrix() : storage_(Dense<Rational>{}) {}
  Matrix(std::size_t rows, std::size_t cols, NumericMode mode = NumericMode::Rational);
  explicit Matrix(Storage storage);

  static Matrix identity(std::size_t n, NumericMode mode = NumericMode::Rational);
  /// δ_n^i as an n x 1 column (i is 1-based).
  static Matrix basis_vector(std::size_t n, std::size_t i, NumericMode mode = NumericMode::Rational);
  static Matrix from_rows(std::initializer_list<std::initializer_list<long>> rows,
                          NumericMode mode = NumericMode::Rational);
  static Matrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols_if_empty = 0);
  static Matrix column(const std::vector<Scalar>& entries);

  std::size_t rows() const noexcept;
  std::size_t cols() const noexcept;
  std::size_t size() const noexcept { return rows() * cols(); }
  NumericMode mode() const noexcept {
    return std::holds_alternative<Dense<Rational>>(storage_) ? NumericMode::Rational : NumericMode::Float;
  }

  Scalar at(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Scalar& v);

  bool is_zero() const;
  double max_abs() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t h, std::size_t w) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Matrix col(std::size_t c) const { return block(0, c, rows(), 1); }
  Matrix converted(NumericMode mode) const;
  Matrix scaled(const Scalar& s) const;

  const Storage& storage() const noexcept { return storage_; }
  Storage& storage() noexcept { return storage_; }

  /// Rows separated by "; ", entries by single spaces.
  std::string str() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Storage storage_;
};

Matrix hconcat(std::span<const Matrix> parts);
Matrix vconcat(std::span<const Matrix> parts);

/// Calls f(Dense<T>&...) on operands that share a mode; throws ModeMismatch otherwise.
template <class F>
decltype(auto) visit_same(const Matrix& a, const Matrix& b, F&& f) {
  if (a.mode() != b.mode()) throw ModeMismatch("matrix operands use different numeric modes");
  if (a.mode() == NumericMode::Rational)
    return f(std::get<Dense<Rational>>(a.storage()), std::get<Dense<Rational>>(b.storage()));
  return f(std::get<Dense<double>>(a.storage()), std::get<Dense<double>>(b.storage()));
}

}  // namespace stpsw
