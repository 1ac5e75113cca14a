#include "stpsw/subspace.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace stpsw {

namespace {

double magnitude(double v) { return std::fabs(v); }

/// In-place reduced row-echelon form; returns the rank. Rational mode takes the first
/// nonzero pivot, float mode the largest one.
template <class T>
std::size_t reduce_rows(Dense<T>& d) {
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < d.cols && pivot_row < d.rows; ++c) {
    std::size_t best = d.rows;
    double best_mag = 0.0;
    for (std::size_t r = pivot_row; r < d.rows; ++r) {
      if (is_zero(d(r, c))) continue;
      if constexpr (std::is_same_v<T, double>) {
        if (magnitude(d(r, c)) > best_mag) {
          best_mag = magnitude(d(r, c));
          best = r;
        }
      } else {
        best = r;
        break;
      }
    }
    if (best == d.rows) {
      if constexpr (std::is_same_v<T, double>)
        for (std::size_t r = pivot_row; r < d.rows; ++r) d(r, c) = 0.0;
      continue;
    }
    if (best != pivot_row)
      for (std::size_t j = 0; j < d.cols; ++j) std::swap(d(best, j), d(pivot_row, j));
    T inv = T(1) / d(pivot_row, c);
    for (std::size_t j = c; j < d.cols; ++j) d(pivot_row, j) *= inv;
    for (std::size_t r = 0; r < d.rows; ++r) {
      if (r == pivot_row || is_zero(d(r, c))) continue;
      T f = d(r, c);
      for (std::size_t j = c; j < d.cols; ++j) d(r, j) -= f * d(pivot_row, j);
      if constexpr (std::is_same_v<T, double>) d(r, c) = 0.0;
    }
    ++pivot_row;
  }
  return pivot_row;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix copy = m;
  return std::visit([](auto& d) { return reduce_rows(d); }, copy.storage());
}

Subspace::Subspace(std::size_t ambient_dim, NumericMode mode) : ambient_(ambient_dim), basis_(ambient_dim, 0, mode) {}

Subspace Subspace::span_of(const Matrix& generators) {
  // Column echelon form of G is the transpose of the row echelon form of G^T.
  Matrix t = generators.transpose();
  std::size_t r = std::visit([](auto& d) { return reduce_rows(d); }, t.storage());
  Subspace s(generators.rows(), generators.mode());
  s.basis_ = t.block(0, 0, r, t.cols()).transpose();
  return s;
}

bool Subspace::contains(const Subspace& other) const { return contains(other.basis()); }

bool Subspace::contains(const Matrix& vectors) const {
  if (vectors.rows() != ambient_) throw DimensionError("subspace containment: ambient dimensions differ");
  if (vectors.cols() == 0) return true;
  std::array<Matrix, 2> parts{basis_, vectors};
  return stpsw::rank(hconcat(parts)) == rank();
}

Subspace column_space(const Matrix& a) { return Subspace::span_of(a); }

Subspace subspace_sum(std::span<const Subspace> parts) {
  if (parts.empty()) throw DimensionError("subspace sum of an empty list");
  std::vector<Matrix> bases;
  bases.reserve(parts.size());
  for (const auto& p : parts) {
    if (p.ambient_dim() != parts.front().ambient_dim()) throw DimensionError("subspace sum: ambient dimensions differ");
    bases.push_back(p.basis());
  }
  return Subspace::span_of(hconcat(bases));
}

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  std::array<Subspace, 2> parts{a, b};
  return subspace_sum(parts);
}

bool subspace_contains(const Subspace& big, const Subspace& small) { return big.contains(small); }

bool subspace_is_full(const Subspace& s, std::size_t n) {
  if (s.ambient_dim() != n) throw DimensionError("subspace fullness: ambient dimension differs");
  return s.is_full();
}

}  // namespace stpsw
