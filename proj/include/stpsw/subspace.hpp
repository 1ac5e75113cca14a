#pragma once

#include <cstddef>
#include <span>

#include "stpsw/matrix.hpp"

namespace stpsw {

/// Rank by Gaussian elimination: exact in rational mode, partial pivoting with
/// float_tolerance() in float mode.
std::size_t rank(const Matrix& m);

/// Column space of an ambient_dim x r basis kept in reduced column-echelon form, so equal
/// subspaces have identical bases.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0, NumericMode mode = NumericMode::Rational);

  static Subspace span_of(const Matrix& generators);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t rank() const noexcept { return basis_.cols(); }
  NumericMode mode() const noexcept { return basis_.mode(); }
  const Matrix& basis() const noexcept { return basis_; }

  bool is_full() const noexcept { return rank() == ambient_; }
  bool contains(const Subspace& other) const;
  bool contains(const Matrix& vectors) const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_;
  Matrix basis_;
};

/// Im(a).
Subspace column_space(const Matrix& a);
/// Column space of the horizontal concatenation of all bases.
Subspace subspace_sum(std::span<const Subspace> parts);
Subspace subspace_sum(const Subspace& a, const Subspace& b);
/// rank(big) == rank([big | small]).
bool subspace_contains(const Subspace& big, const Subspace& small);
bool subspace_is_full(const Subspace& s, std::size_t n);

}  // namespace stpsw
