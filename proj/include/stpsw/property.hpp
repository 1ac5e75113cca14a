#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace stpsw {

using InputSequence = std::vector<std::size_t>;

enum class Property { Reachability, Controllability, Observability, Reconstructibility };

std::string to_string(Property p);
/// Whether the property is checked on the dual merged system.
bool is_dual_property(Property p);

struct AlphaDetail {
  std::size_t span_rank = 0;
  /// Free motion contained in the span (controllability / reconstructibility); for the
  /// other properties this mirrors span_rank == n.
  bool contained = false;
  bool passes = false;
  std::size_t terminal_theta = 0;
};

struct PropertyVerdict {
  Property property = Property::Reachability;
  bool holds = false;
  /// Lexicographically first passing sequence at the shortest passing horizon.
  std::optional<InputSequence> witness;
  /// Horizon of the witness, or the largest horizon searched when none was found.
  std::size_t horizon = 0;
  /// Details for the witness, or for the best candidate at the final horizon on failure.
  std::map<std::size_t, AlphaDetail> per_alpha;
  std::vector<std::size_t> checked_alphas;
  /// Every passing sequence at the witness horizon, in lexicographic order.
  std::vector<InputSequence> witnesses_at_horizon;
  bool strict = false;
  std::size_t sequences_examined = 0;
};

}  // namespace stpsw
