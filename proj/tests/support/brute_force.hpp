#pragma once

// Exhaustive reference checks for the realization layer.

#include <algorithm>
#include <optional>
#include <vector>

#include "stpsw/logical_network.hpp"
#include "stpsw/realization.hpp"
#include "support/systems.hpp"

namespace stpsw::testing {

struct BruteFot {
  std::vector<std::vector<std::size_t>> failing_escape, failing_stay;
};

/// Direct enumeration: from (γ,θ) the next pair is (γ', L(γ,θ)) for a free choice of γ'.
inline BruteFot brute_fot(const LogicalNetwork& net, const std::vector<std::size_t>& durations) {
  BruteFot b;
  b.failing_escape.resize(net.signals());
  b.failing_stay.resize(net.signals());
  for (std::size_t j = 1; j <= net.input_states(); ++j) {
    auto is = net.decode(j);
    std::size_t sigma = net.signal_at(is.gamma, is.theta);
    std::size_t d = durations[sigma - 1];
    std::size_t next = net.next_state(is.gamma, is.theta);
    bool can_stay = false, can_leave = false;
    for (std::size_t g = 1; g <= net.inputs(); ++g) {
      if (net.signal_at(g, next) == sigma) can_stay = true;
      else can_leave = true;
    }
    if (d != FotSpec::infinity && !can_leave) b.failing_escape[sigma - 1].push_back(j);
    if (d != 1 && !can_stay) b.failing_stay[sigma - 1].push_back(j);
  }
  return b;
}

/// Smallest t at which no input sequence reproduces reference[0..t]; nullopt if trackable.
inline std::optional<std::size_t> brute_track(const LogicalNetwork& net, std::size_t theta0, const std::vector<std::size_t>& ref) {
  std::optional<std::size_t> first_fail;
  std::size_t best = 0;  // longest matched prefix length
  for (const auto& g : all_tuples(net.inputs(), ref.size())) {
    std::size_t theta = theta0, matched = 0;
    for (std::size_t t = 0; t < ref.size(); ++t) {
      if (net.signal_at(g[t], theta) != ref[t]) break;
      ++matched;
      theta = net.next_state(g[t], theta);
    }
    best = std::max(best, matched);
  }
  if (best < ref.size()) first_fail = best;
  return first_fail;
}

}  // namespace stpsw::testing
