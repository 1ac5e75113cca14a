#include "stpsw/set_reachability.hpp"

#include <algorithm>
#include <sstream>

namespace stpsw {

InputStateSubset::InputStateSubset(std::vector<std::size_t> members) : members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("input-state subset must be non-empty");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.front() < 1) throw IndexError("input-state indices are 1-based");
}

bool InputStateSubset::contains(std::size_t index) const {
  return std::binary_search(members_.begin(), members_.end(), index);
}

BooleanMatrix InputStateSubset::index_vector(std::size_t mn) const {
  if (members_.back() > mn) {
    std::ostringstream os;
    os << "input-state index " << members_.back() << " exceeds MN = " << mn;
    throw IndexError(os.str());
  }
  BooleanMatrix v(mn, 1);
  for (std::size_t i : members_) v.set(i - 1, 0, true);
  return v;
}

BooleanMatrix SubsetClass::index_matrix(std::size_t mn) const {
  BooleanMatrix p(mn, subsets_.size());
  for (std::size_t j = 0; j < subsets_.size(); ++j) {
    BooleanMatrix v = subsets_[j].index_vector(mn);
    for (std::size_t i = 0; i < mn; ++i) p.set(i, j, v(i, 0));
  }
  return p;
}

BooleanMatrix input_state_matrix(const LogicalNetwork& net) {
  std::size_t n = net.states(), mn = net.input_states();
  BooleanMatrix big(mn, mn);
  const auto& l = net.transition();
  for (std::size_t j = 1; j <= mn; ++j)
    for (std::size_t g = 0; g < net.inputs(); ++g) big.set(g * n + l[j] - 1, j - 1, true);
  return big;
}

BooleanMatrix set_reachability_matrix(const LogicalNetwork& net, const SubsetClass& initial,
                                      const SubsetClass& terminal, std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("ℓ must be at least 1");
  std::size_t mn = net.input_states();
  BooleanMatrix p0 = initial.index_matrix(mn);
  BooleanMatrix pd = terminal.index_matrix(mn);
  BooleanMatrix power = boolean_power(input_state_matrix(net), ell);
  return boolean_product(boolean_product(pd.transpose(), power), p0);
}

Matrix set_reachability_counts(const LogicalNetwork& net, const SubsetClass& initial, const SubsetClass& terminal,
                               std::size_t ell) {
  if (ell == 0) throw std::invalid_argument("ℓ must be at least 1");
  std::size_t mn = net.input_states();
  Matrix p0 = initial.index_matrix(mn).to_matrix();
  Matrix pd = terminal.index_matrix(mn).to_matrix();
  Matrix big = input_state_matrix(net).to_matrix();
  Matrix power = big;
  for (std::size_t i = 1; i < ell; ++i) power = big * power;
  return pd.transpose() * power * p0;
}

SetReachabilityVerdicts set_reachability_verdicts(const BooleanMatrix& c_ell) {
  SetReachabilityVerdicts v;
  v.pairwise = c_ell;
  for (std::size_t j = 0; j < c_ell.cols(); ++j) v.reachable_at.push_back(c_ell.col_all_ones(j));
  for (std::size_t i = 0; i < c_ell.rows(); ++i) v.globally_reachable.push_back(c_ell.row_all_ones(i));
  v.fully_reachable = c_ell.all_ones();
  return v;
}

}  // namespace stpsw
