#pragma once

#include <cstddef>
#include <vector>

#include "stpsw/matrix.hpp"

namespace stpsw {

/// One linear mode x' = A x + B u, y = C x.
struct Mode {
  Matrix a;
  Matrix b;
  Matrix c;

  friend bool operator==(const Mode&, const Mode&) = default;
};

/// Discrete-time switched linear system with q >= 1 modes of common dimensions.
class SwitchedLinearSystem {
 public:
  explicit SwitchedLinearSystem(std::vector<Mode> modes);

  std::size_t n() const noexcept { return n_; }
  std::size_t m() const noexcept { return m_; }
  std::size_t p() const noexcept { return p_; }
  std::size_t q() const noexcept { return modes_.size(); }
  NumericMode numeric_mode() const noexcept { return modes_.front().a.mode(); }

  /// Mode σ, 1-based.
  const Mode& mode(std::size_t sigma) const;
  const std::vector<Mode>& modes() const noexcept { return modes_; }

  /// [A_1 ... A_q], [B_1 ... B_q], [C_1 ... C_q].
  Matrix stacked_a() const;
  Matrix stacked_b() const;
  Matrix stacked_c() const;

  /// x' = A_σ x + B_σ u.
  Matrix step(std::size_t sigma, const Matrix& x, const Matrix& u) const;

  friend bool operator==(const SwitchedLinearSystem&, const SwitchedLinearSystem&) = default;

 private:
  std::vector<Mode> modes_;
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t p_ = 0;
};

}  // namespace stpsw
