#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stpsw/logical_network.hpp"

namespace stpsw {

enum class AttractorKind { FixedPoint, Cycle };

/// A control fixed point or control cycle together with its attract basin.
struct ControlAttractor {
  AttractorKind kind = AttractorKind::FixedPoint;
  /// states[t+1] = L ⋉ inputs[t] ⋉ states[t]; the last input closes the loop to states[0].
  /// states[0] is the smallest state of the cycle.
  std::vector<std::size_t> states;
  std::vector<std::size_t> inputs;
  /// States that can be steered into the attractor (sorted, includes the attractor itself).
  std::vector<std::size_t> basin;
  /// Sum over the basin of the shortest steering distance into the attractor.
  std::size_t steering_depth = 0;

  std::size_t representative() const { return states.front(); }
};

struct ControlAttractorReport {
  std::vector<ControlAttractor> fixed_points;
  std::vector<ControlAttractor> cycles;
  /// True when cycle enumeration hit its cap; at least one cycle per start state is still kept.
  bool cycles_truncated = false;
  /// Attractors whose basins cover Δ_N, chosen disjoint first.
  std::vector<ControlAttractor> selected;

  /// Representatives of the selected attractors, ascending.
  std::vector<std::size_t> checked_states() const;
  /// The selected attractor whose basin contains theta.
  const ControlAttractor& covering(std::size_t theta) const;
};

/// Finds all control fixed points and simple control cycles of the state transition graph
/// {θ -> L⋉γ⋉θ : γ ∈ [1,M]}, their basins by backward search, and a covering selection.
///
/// Selection order: larger basin first, then fixed points before cycles, then smaller steering
/// depth, then shorter cycle, then smaller representative. An attractor is taken when its basin
/// is disjoint from those already taken; remaining uncovered states are then covered greedily.
ControlAttractorReport control_attractors(const LogicalNetwork& net, std::size_t max_cycles = 100000);

/// Shortest input sequence steering `from` into any state of `targets` (empty when already
/// inside); ties resolved towards smaller inputs. nullopt when unreachable.
std::optional<std::vector<std::size_t>> steering_inputs(const LogicalNetwork& net, std::size_t from,
                                                        const std::vector<std::size_t>& targets);

/// Input sequence that steers `from` to exactly `target`.
std::optional<std::vector<std::size_t>> steering_inputs(const LogicalNetwork& net, std::size_t from,
                                                        std::size_t target);

}  // namespace stpsw
