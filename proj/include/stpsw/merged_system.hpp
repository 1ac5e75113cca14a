#pragma once

#include <cstddef>
#include <vector>

#include "stpsw/boolean_matrix.hpp"
#include "stpsw/logical_network.hpp"
#include "stpsw/matrix.hpp"
#include "stpsw/switched_system.hpp"

namespace stpsw {

/// Block form of [X_1 ... X_M], each X_γ an N x N grid of r x c blocks. Column β of X_γ has
/// its only (possibly nonzero) block at row target(γ, β).
class BlockForm {
 public:
  BlockForm(std::size_t inputs, std::size_t states, std::size_t block_rows, std::size_t block_cols,
            NumericMode mode);

  std::size_t inputs() const noexcept { return inputs_; }
  std::size_t states() const noexcept { return states_; }
  std::size_t block_rows() const noexcept { return block_rows_; }
  std::size_t block_cols() const noexcept { return block_cols_; }

  void place(std::size_t gamma, std::size_t beta, std::size_t target, Matrix block);

  std::size_t target(std::size_t gamma, std::size_t beta) const;
  const Matrix& nonzero_block(std::size_t gamma, std::size_t beta) const;
  /// Block (α, β) of X_γ; zero unless α == target(γ, β).
  Matrix block(std::size_t gamma, std::size_t alpha, std::size_t beta) const;

  /// X_γ as an (r·N) x (c·N) matrix.
  Matrix flat(std::size_t gamma) const;
  /// [X_1 ... X_M].
  Matrix flat() const;
  /// Compress each block of X_γ to 1 (nonzero) or 0 (zero), numerically.
  BooleanMatrix compressed_pattern(std::size_t gamma) const;

 private:
  std::size_t slot(std::size_t gamma, std::size_t beta) const;

  std::size_t inputs_;
  std::size_t states_;
  std::size_t block_rows_;
  std::size_t block_cols_;
  NumericMode mode_;
  std::vector<std::size_t> targets_;
  std::vector<Matrix> blocks_;
};

enum class MergeKind { Primal, Dual };

struct MergeOptions {
  /// Also evaluate L[I_{MN} ⊗ (X R)]Φ_{MN} by semi-tensor products and require agreement with
  /// the block placement. Subject to the sizing cap.
  bool closed_form_check = true;
};

/// Hybrid system on z = θ ⋉ x:  z' = G γ z + H γ θ u.
/// Primal: blocks A_σ (G) and B_σ (H). Dual: blocks A_σ^T (G̃) and C_σ^T (H̃).
struct MergedSystem {
  MergeKind kind;
  SwitchedLinearSystem sls;
  LogicalNetwork net;
  BlockForm g;
  BlockForm h;
  bool closed_form_checked = false;

  Matrix g_flat() const { return g.flat(); }
  Matrix h_flat() const { return h.flat(); }
};

MergedSystem merge(const SwitchedLinearSystem& sls, const LogicalNetwork& net, const MergeOptions& options = {});
MergedSystem merge_dual(const SwitchedLinearSystem& sls, const LogicalNetwork& net,
                        const MergeOptions& options = {});

/// L ⋉ [I_{MN} ⊗ (stacked ⋉ R)] ⋉ Φ_{MN} for stacked = [X_1 ... X_q].
Matrix merged_closed_form(const Matrix& stacked, const LogicalNetwork& net);

struct MergedStep {
  std::size_t theta_next = 0;
  Matrix x_next;
};

/// One step of the merged dynamics from (θ, x) under (γ, u). θ' is read off L structurally;
/// x' is block row θ' of G_γ(θ⊗x) + H_γ(θ⊗u).
MergedStep step_merged(const MergedSystem& ms, std::size_t gamma, std::size_t theta, const Matrix& x,
                       const Matrix& u);

}  // namespace stpsw
