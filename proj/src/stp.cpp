#include "stpsw/stp.hpp"

#include <numeric>

namespace stpsw {

Matrix kronecker(const Matrix& a, const Matrix& b) {
  std::size_t r = a.rows() * b.rows();
  std::size_t c = a.cols() * b.cols();
  check_size(r, c, "kronecker");
  return Matrix(visit_same(a, b, [&](const auto& x, const auto& y) -> Matrix::Storage {
    using D = std::decay_t<decltype(x)>;
    using T = typename decltype(x.values)::value_type;
    D out{r, c, std::vector<T>(r * c, T(0))};
    for (std::size_t i = 0; i < x.rows; ++i)
      for (std::size_t j = 0; j < x.cols; ++j) {
        const T& aij = x(i, j);
        if (is_zero(aij)) continue;
        for (std::size_t k = 0; k < y.rows; ++k)
          for (std::size_t l = 0; l < y.cols; ++l) out(i * y.rows + k, j * y.cols + l) = aij * y(k, l);
      }
    return out;
  }));
}

Matrix khatri_rao(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw DimensionError("khatri_rao: column counts differ");
  std::size_t r = a.rows() * b.rows();
  check_size(r, a.cols(), "khatri_rao");
  return Matrix(visit_same(a, b, [&](const auto& x, const auto& y) -> Matrix::Storage {
    using D = std::decay_t<decltype(x)>;
    using T = typename decltype(x.values)::value_type;
    D out{r, x.cols, std::vector<T>(r * x.cols, T(0))};
    for (std::size_t j = 0; j < x.cols; ++j)
      for (std::size_t i = 0; i < x.rows; ++i)
        for (std::size_t k = 0; k < y.rows; ++k) out(i * y.rows + k, j) = x(i, j) * y(k, j);
    return out;
  }));
}

Matrix stp(const Matrix& a, const Matrix& b) {
  std::size_t n = a.cols(), p = b.rows();
  if (n == 0 || p == 0) throw DimensionError("stp: empty inner dimension");
  if (n == p) return a * b;
  std::size_t t = std::lcm(n, p);
  check_size(a.rows() * (t / n), b.cols() * (t / p), "stp");
  Matrix left = t == n ? a : kronecker(a, Matrix::identity(t / n, a.mode()));
  Matrix right = t == p ? b : kronecker(b, Matrix::identity(t / p, b.mode()));
  return left * right;
}

}  // namespace stpsw
