#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "stpsw/merged_system.hpp"
#include "stpsw/property.hpp"
#include "stpsw/subspace.hpp"

namespace stpsw {

/// Logical trajectory induced by (α, γ_0..γ_{T-1}): thetas has T+1 entries, sigmas T.
struct SwitchingTrajectory {
  std::vector<std::size_t> thetas;
  std::vector<std::size_t> sigmas;
};

SwitchingTrajectory switching_trajectory(const LogicalNetwork& net, std::size_t alpha, const InputSequence& gammas);

/// Reachable set from x = 0 along (α, gammas), built from the block chain of the merged system.
/// Primal: term t = A_{σ_{T-1}}···A_{σ_{t+1}} B_{σ_t}.
/// Dual:   term t = A_{σ_0}^T···A_{σ_{t-1}}^T C_{σ_t}^T.
struct ReachableSet {
  std::size_t alpha = 0;
  InputSequence gammas;
  std::vector<Subspace> terms;
  Subspace span;
  std::size_t terminal_theta = 0;
};

ReachableSet reachable_set(const MergedSystem& ms, std::size_t alpha, const InputSequence& gammas);

/// Projected T-step free motion along (α, gammas): A_{σ_{T-1}}···A_{σ_0} (primal) or
/// A_{σ_0}^T···A_{σ_{T-1}}^T (dual).
Matrix free_motion(const MergedSystem& ms, std::size_t alpha, const InputSequence& gammas);

struct SearchOptions {
  /// Longest horizon searched; defaults to n.
  std::optional<std::size_t> t_max;
  /// Check every α ∈ [1, N] instead of the selected control attractors.
  bool strict = false;
  /// Cap on (sequence, horizon) candidates; exceeding it throws BudgetExceeded.
  std::size_t max_sequences = 1000000;
  /// Explicit α-set; overrides `strict`.
  std::optional<std::vector<std::size_t>> alphas;
};

/// α-set for a search: explicit, all states (strict) or the selected attractor representatives.
std::vector<std::size_t> checked_alphas(const LogicalNetwork& net, const SearchOptions& options);

/// Evaluates one sequence for one α.
AlphaDetail evaluate_alpha(const MergedSystem& ms, Property property, std::size_t alpha, const InputSequence& gammas);

/// True when `gammas` passes for every α in `alphas`.
bool sequence_passes(const MergedSystem& ms, Property property, const std::vector<std::size_t>& alphas,
                     const InputSequence& gammas);

/// Breadth-first in T, lexicographic in γ search for one sequence passing for every checked α.
/// Reachability/controllability need a primal merge, observability/reconstructibility a dual one.
PropertyVerdict check_property(const MergedSystem& ms, Property property, const SearchOptions& options = {});

PropertyVerdict check_reachability(const MergedSystem& ms, const SearchOptions& options = {});
PropertyVerdict check_controllability(const MergedSystem& ms, const SearchOptions& options = {});
PropertyVerdict check_observability(const MergedSystem& ms_dual, const SearchOptions& options = {});
PropertyVerdict check_reconstructibility(const MergedSystem& ms_dual, const SearchOptions& options = {});

struct FeasibleSequence {
  InputSequence gammas;
  std::map<std::size_t, SwitchingTrajectory> trajectories;
};

struct FeasibleSequences {
  /// Shortest length with a passing sequence; 0 when none up to k_max.
  std::size_t k = 0;
  std::vector<std::size_t> alphas;
  std::vector<FeasibleSequence> sequences;
};

/// All reachability-passing input sequences at the first length k ≤ k_max where one exists,
/// started from the selected control attractors (or `alphas`).
FeasibleSequences feasible_input_sequences(const MergedSystem& ms, std::size_t k_max,
                                           const std::optional<std::vector<std::size_t>>& alphas = std::nullopt,
                                           std::size_t max_sequences = 1000000);

}  // namespace stpsw
