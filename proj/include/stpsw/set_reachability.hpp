#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "stpsw/boolean_matrix.hpp"
#include "stpsw/logical_network.hpp"
#include "stpsw/matrix.hpp"

namespace stpsw {

/// Non-empty set of input-state indices in [1, MN].
class InputStateSubset {
 public:
  explicit InputStateSubset(std::vector<std::size_t> members);
  InputStateSubset(std::initializer_list<std::size_t> members)
      : InputStateSubset(std::vector<std::size_t>(members)) {}

  const std::vector<std::size_t>& members() const noexcept { return members_; }
  bool contains(std::size_t index) const;
  /// V(Ω) ∈ B_{MN x 1}.
  BooleanMatrix index_vector(std::size_t mn) const;

 private:
  std::vector<std::size_t> members_;
};

/// Ordered class of subsets; the index matrix stacks the index vectors as columns.
class SubsetClass {
 public:
  SubsetClass() = default;
  SubsetClass(std::vector<InputStateSubset> subsets) : subsets_(std::move(subsets)) {}  // NOLINT
  SubsetClass(std::initializer_list<InputStateSubset> subsets) : subsets_(subsets) {}

  std::size_t size() const noexcept { return subsets_.size(); }
  const std::vector<InputStateSubset>& subsets() const noexcept { return subsets_; }
  /// P_Ω ∈ B_{MN x |class|}.
  BooleanMatrix index_matrix(std::size_t mn) const;

 private:
  std::vector<InputStateSubset> subsets_;
};

/// **L** = 1_M L ∈ B_{MN x MN}: column j has a 1 at every (γ', L-target of j).
BooleanMatrix input_state_matrix(const LogicalNetwork& net);

/// C_ℓ = (P^d)^T ×_B **L**^(ℓ) ×_B P^0 (ℓ >= 1).
BooleanMatrix set_reachability_matrix(const LogicalNetwork& net, const SubsetClass& initial,
                                      const SubsetClass& terminal, std::size_t ell);

/// C̃_ℓ with ordinary integer arithmetic; entry (i,j) counts ℓ-edge input-state paths from
/// Ω_j^0 to Ω_i^d. Exact (rational mode).
Matrix set_reachability_counts(const LogicalNetwork& net, const SubsetClass& initial, const SubsetClass& terminal,
                               std::size_t ell);

struct SetReachabilityVerdicts {
  BooleanMatrix pairwise;                ///< [C_ℓ]_{ij}: Ω_i^d reachable from Ω_j^0
  std::vector<bool> reachable_at;        ///< per initial subset j: column j all ones
  std::vector<bool> globally_reachable;  ///< per terminal subset i: row i all ones
  bool fully_reachable = false;          ///< C_ℓ is all ones
};

SetReachabilityVerdicts set_reachability_verdicts(const BooleanMatrix& c_ell);

}  // namespace stpsw
