#pragma once

#include <cstddef>
#include <vector>

#include "stpsw/logical_network.hpp"
#include "stpsw/property.hpp"
#include "stpsw/switched_system.hpp"

namespace stpsw {

// Brute-force reference implementations. They read L and R as raw data and replay them with
// dense semi-tensor products, never through the merged system or the network helpers.

struct EnumerationBudget {
  std::size_t max_sequences = 1000000;
  std::size_t max_horizon = 32;
};

struct EnumeratedSequence {
  InputSequence gammas;
  std::vector<std::size_t> sigmas;
};

/// All M^T input sequences from α in lexicographic order with their switching sequences.
std::vector<EnumeratedSequence> enumerate_switching_sequences(const LogicalNetwork& net, std::size_t alpha,
                                                              std::size_t horizon,
                                                              const EnumerationBudget& budget = {});

/// rank [B_{σ_{T-1}}, A_{σ_{T-1}} B_{σ_{T-2}}, ..., A_{σ_{T-1}}···A_{σ_1} B_{σ_0}].
std::size_t kalman_rank(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls);
/// rank [C_{σ_0}; C_{σ_1} A_{σ_0}; ...; C_{σ_{T-1}} A_{σ_{T-2}}···A_{σ_0}].
std::size_t obsv_rank(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls);

/// Classical rank test of a property along one switching sequence:
///   reachability       rank K = n          controllability     rank K = rank [K | Φ]
///   observability      rank O = n          reconstructibility  rank O = rank [O ; Φ]
/// with Φ = A_{σ_{T-1}}···A_{σ_0}.
bool rank_condition_holds(Property property, const std::vector<std::size_t>& sigmas,
                          const SwitchedLinearSystem& sls);

/// Exhaustive search over all sequences of length 1..t_max for one that satisfies the rank
/// condition from every α in `alphas`. Throws BudgetExceeded when Σ M^T exceeds the budget.
PropertyVerdict kalman_oracle(const SwitchedLinearSystem& sls, const LogicalNetwork& net, Property property,
                              const std::vector<std::size_t>& alphas, std::size_t t_max,
                              const EnumerationBudget& budget = {});

/// Number of ℓ-edge input-state paths starting in `from` and ending in `to`, by depth-first search.
std::size_t count_paths(const LogicalNetwork& net, const std::vector<std::size_t>& from,
                        const std::vector<std::size_t>& to, std::size_t ell, const EnumerationBudget& budget = {});

}  // namespace stpsw
