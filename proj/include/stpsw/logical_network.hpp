#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stpsw/logical_matrix.hpp"

namespace stpsw {

/// Node structure of a k-valued network: N = k^state_nodes, M = k^input_nodes.
struct NodeLayout {
  std::size_t k = 2;
  std::size_t state_nodes = 0;
  std::size_t input_nodes = 0;

  friend bool operator==(const NodeLayout&, const NodeLayout&) = default;
};

/// An input-state pair; both components are 1-based.
struct InputState {
  std::size_t gamma = 1;
  std::size_t theta = 1;

  friend bool operator==(const InputState&, const InputState&) = default;
};

struct StepResult {
  std::size_t theta_next = 0;
  std::size_t sigma = 0;

  friend bool operator==(const StepResult&, const StepResult&) = default;
};

/// Logical control network in algebraic form:
///   θ(t+1) = L ⋉ γ(t) ⋉ θ(t),   σ(t) = R ⋉ γ(t) ⋉ θ(t),
/// with L ∈ L_{N x MN} and R ∈ L_{q x MN}. Input-state pairs are encoded as
/// (γ-1)·N + θ, which is the index of δ_M^γ ⋉ δ_N^θ.
class LogicalNetwork {
 public:
  LogicalNetwork(std::size_t states, std::size_t inputs, LogicalMatrix transition, LogicalMatrix signal,
                 std::optional<NodeLayout> layout = std::nullopt);

  std::size_t states() const noexcept { return states_; }   ///< N
  std::size_t inputs() const noexcept { return inputs_; }   ///< M
  std::size_t signals() const noexcept { return signal_.rows(); }  ///< q
  std::size_t input_states() const noexcept { return states_ * inputs_; }  ///< MN
  const std::optional<NodeLayout>& layout() const noexcept { return layout_; }

  const LogicalMatrix& transition() const noexcept { return transition_; }  ///< L
  const LogicalMatrix& signal() const noexcept { return signal_; }          ///< R
  /// L_γ ∈ L_{N x N}.
  LogicalMatrix transition_block(std::size_t gamma) const;

  std::size_t encode(std::size_t gamma, std::size_t theta) const;
  InputState decode(std::size_t index) const;

  StepResult step(std::size_t gamma, std::size_t theta) const;
  std::size_t next_state(std::size_t gamma, std::size_t theta) const { return step(gamma, theta).theta_next; }
  std::size_t signal_at(std::size_t gamma, std::size_t theta) const { return step(gamma, theta).sigma; }

  /// "γ×(θ1,...,θn)" per node values when a layout is known, plain indices otherwise.
  std::string label(std::size_t gamma, std::size_t theta) const;

  friend bool operator==(const LogicalNetwork&, const LogicalNetwork&) = default;

 private:
  std::size_t states_;
  std::size_t inputs_;
  LogicalMatrix transition_;
  LogicalMatrix signal_;
  std::optional<NodeLayout> layout_;
};

/// Builds the network from per-node truth tables. truth_tables[i][j] ∈ [1,k] is the next
/// value of state node i at input-state index j+1 (STP ordering). L is the Khatri-Rao
/// product of the node structure matrices. signal_table (q rows) defaults to q = 1.
LogicalNetwork build_from_functions(std::size_t k, std::size_t state_nodes, std::size_t input_nodes,
                                    const std::vector<std::vector<std::size_t>>& truth_tables,
                                    std::optional<LogicalMatrix> signal = std::nullopt);

/// Base-k digits (each in [1,k], most significant first) of a 1-based index.
std::vector<std::size_t> node_values(std::size_t index, std::size_t k, std::size_t nodes);

std::size_t checked_power(std::size_t base, std::size_t exp);

}  // namespace stpsw
