#pragma once

#include <string>

#include "stpsw/logical_network.hpp"

namespace stpsw {

/// Input-state dynamic graph in DOT: one node per (γ,θ) labelled "γ×(θ1,...)", an edge
/// (γ,θ) -> (γ',θ') for every γ' when θ' = L⋉γ⋉θ.
std::string input_state_graph_dot(const LogicalNetwork& net);

}  // namespace stpsw
