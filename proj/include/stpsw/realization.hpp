#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "stpsw/boolean_matrix.hpp"
#include "stpsw/logical_network.hpp"

namespace stpsw {

/// True iff Σ_γ L_γ is entrywise positive: every state reaches every state in one step.
bool check_one_step_universal(const LogicalNetwork& net);

/// O_σ = {(γ,θ) : R⋉γ⋉θ = δ_q^σ} as input-state indices.
struct SignalPreimage {
  std::size_t sigma = 0;
  std::vector<std::size_t> members;

  bool empty() const noexcept { return members.empty(); }
  /// P_{Õ_σ} ∈ B_{MN x |O_σ|}: one column per member.
  BooleanMatrix singleton_matrix(std::size_t mn) const;
  /// V(O_σ) ∈ B_{MN x 1}.
  BooleanMatrix index_vector(std::size_t mn) const;
  /// V(Δ_MN \ O_σ).
  BooleanMatrix complement_vector(std::size_t mn) const;
};

/// One entry per signal value 1..q; together they partition [1, MN].
std::vector<SignalPreimage> signal_preimages(const LogicalNetwork& net);

/// Fixed operating time per mode; `infinity` means the mode, once active, runs forever.
struct FotSpec {
  static constexpr std::size_t infinity = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> durations;
};

enum class DurationClass { One, Finite, Infinite };

struct SignalDiagnostic {
  std::size_t sigma = 0;
  DurationClass duration_class = DurationClass::One;
  bool requires_escape = false;
  bool requires_stay = false;
  /// Members from which no input leaves O_σ in one step.
  std::vector<std::size_t> failing_escape;
  /// Members from which no input stays in O_σ in one step.
  std::vector<std::size_t> failing_stay;
  /// O_σ is empty: the signal is never produced and its conditions hold vacuously.
  bool signal_unreachable = false;
  bool satisfied = true;
};

struct RealizationVerdict {
  bool realizable = true;
  std::vector<SignalDiagnostic> signals;
  std::vector<std::string> warnings;
};

/// Per-singleton escape (d = 1), escape and stay (1 < d < ∞) and stay (d = ∞) conditions,
/// evaluated as P_{Δ\O}^T ×_B **L** ×_B P_{Õ} = 1^T and P_O^T ×_B **L** ×_B P_{Õ} = 1^T.
RealizationVerdict check_fot_realizable(const LogicalNetwork& net, const FotSpec& spec);

/// Minimum dwell times: realizable iff every signal admits both escape and stay.
RealizationVerdict check_dwell_time_realizable(const LogicalNetwork& net, const std::vector<std::size_t>& min_dwell);

struct TrackingProblem {
  std::size_t theta0 = 1;
  std::vector<std::size_t> reference;
};

struct TrackingVerdict {
  bool trackable = false;
  /// γ_0..γ_τ whose replay emits the reference.
  std::optional<std::vector<std::size_t>> witness;
  /// First t at which the frontier ϑ(t) became empty.
  std::optional<std::size_t> first_failing_t;
  /// |ϑ(t)| for each computed t.
  std::vector<std::size_t> frontier_sizes;
};

/// ϑ(0) = (1_M ⊗ δ_N^{θ0}) ∧ V(O_{σ0}),  ϑ(t) = (**L** ×_B ϑ(t-1)) ∧ V(O_{σt}).
TrackingVerdict check_trackable(const LogicalNetwork& net, const TrackingProblem& problem);

}  // namespace stpsw
