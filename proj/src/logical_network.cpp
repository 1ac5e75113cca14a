#include "stpsw/logical_network.hpp"

#include <limits>
#include <sstream>

#include "stpsw/errors.hpp"

namespace stpsw {

std::size_t checked_power(std::size_t base, std::size_t exp) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::size_t>::max() / base) throw SizingError("k^n overflows");
    r *= base;
  }
  return r;
}

std::vector<std::size_t> node_values(std::size_t index, std::size_t k, std::size_t nodes) {
  std::vector<std::size_t> digits(nodes);
  std::size_t v = index - 1;
  for (std::size_t i = nodes; i-- > 0;) {
    digits[i] = v % k + 1;
    v /= k;
  }
  return digits;
}

LogicalNetwork::LogicalNetwork(std::size_t states, std::size_t inputs, LogicalMatrix transition,
                               LogicalMatrix signal, std::optional<NodeLayout> layout)
    : states_(states), inputs_(inputs), transition_(std::move(transition)), signal_(std::move(signal)),
      layout_(layout) {
  if (states_ == 0 || inputs_ == 0) throw DimensionError("network needs N >= 1 and M >= 1");
  if (transition_.rows() != states_) throw DimensionError("L must have N rows");
  if (transition_.cols() != states_ * inputs_) throw DimensionError("L must have M*N columns");
  if (signal_.cols() != states_ * inputs_) throw DimensionError("R must have M*N columns");
  if (layout_) {
    if (layout_->k < 2) throw DimensionError("node layout needs k >= 2");
    if (checked_power(layout_->k, layout_->state_nodes) != states_ ||
        checked_power(layout_->k, layout_->input_nodes) != inputs_)
      throw DimensionError("node layout does not match N = k^n, M = k^m");
  }
}

LogicalMatrix LogicalNetwork::transition_block(std::size_t gamma) const {
  if (gamma < 1 || gamma > inputs_) throw IndexError("logical input out of range");
  return transition_.columns((gamma - 1) * states_ + 1, states_);
}

std::size_t LogicalNetwork::encode(std::size_t gamma, std::size_t theta) const {
  if (gamma < 1 || gamma > inputs_) throw IndexError("logical input out of range");
  if (theta < 1 || theta > states_) throw IndexError("logical state out of range");
  return (gamma - 1) * states_ + theta;
}

InputState LogicalNetwork::decode(std::size_t index) const {
  if (index < 1 || index > input_states()) throw IndexError("input-state index out of range");
  return {(index - 1) / states_ + 1, (index - 1) % states_ + 1};
}

StepResult LogicalNetwork::step(std::size_t gamma, std::size_t theta) const {
  std::size_t j = encode(gamma, theta);
  return {transition_[j], signal_[j]};
}

std::string LogicalNetwork::label(std::size_t gamma, std::size_t theta) const {
  std::ostringstream os;
  auto tuple = [&os](const std::vector<std::size_t>& v) {
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
  };
  if (!layout_) {
    os << gamma << "×(" << theta << ")";
    return os.str();
  }
  if (layout_->input_nodes <= 1)
    os << gamma;
  else
    tuple(node_values(gamma, layout_->k, layout_->input_nodes));
  os << "×";
  tuple(node_values(theta, layout_->k, layout_->state_nodes));
  return os.str();
}

LogicalNetwork build_from_functions(std::size_t k, std::size_t state_nodes, std::size_t input_nodes,
                                    const std::vector<std::vector<std::size_t>>& truth_tables,
                                    std::optional<LogicalMatrix> signal) {
  if (k < 2) throw std::invalid_argument("k must be at least 2");
  if (state_nodes == 0) throw std::invalid_argument("network needs at least one state node");
  if (truth_tables.size() != state_nodes)
    throw std::invalid_argument("expected one truth table per state node");
  std::size_t n_states = checked_power(k, state_nodes);
  std::size_t n_inputs = checked_power(k, input_nodes);
  std::size_t mn = n_states * n_inputs;
  std::optional<LogicalMatrix> l;
  for (std::size_t i = 0; i < state_nodes; ++i) {
    const auto& table = truth_tables[i];
    if (table.size() != mn) {
      std::ostringstream os;
      os << "truth table of node " << i + 1 << " has " << table.size() << " entries, expected " << mn;
      throw std::invalid_argument(os.str());
    }
    for (std::size_t v : table)
      if (v < 1 || v > k) throw std::invalid_argument("truth table value outside [1, k]");
    LogicalMatrix node(k, table);
    l = l ? khatri_rao(*l, node) : node;
  }
  LogicalMatrix r = signal ? *signal : LogicalMatrix(1, std::vector<std::size_t>(mn, 1));
  return LogicalNetwork(n_states, n_inputs, *l, r, NodeLayout{k, state_nodes, input_nodes});
}

}  // namespace stpsw
