#include "stpsw/oracle.hpp"

#include <algorithm>
#include <string>

#include "stpsw/errors.hpp"
#include "stpsw/stp.hpp"
#include "stpsw/subspace.hpp"

namespace stpsw {

namespace {

/// Index of the single 1 in a logical column vector.
std::size_t hot_index(const Matrix& v) {
  for (std::size_t r = 0; r < v.rows(); ++r)
    if (!v.at(r, 0).is_zero()) return r + 1;
  throw std::logic_error("replay produced a zero vector");
}

/// Replays (γ_t) from α with θ' = L⋉γ⋉θ and σ = R⋉γ⋉θ as dense products.
struct DenseReplay {
  Matrix l;
  Matrix r;
  std::size_t n_states;
  std::size_t n_inputs;

  explicit DenseReplay(const LogicalNetwork& net)
      : l(net.transition().dense()), r(net.signal().dense()), n_states(net.states()), n_inputs(net.inputs()) {}

  std::vector<std::size_t> sigmas(std::size_t alpha, const InputSequence& gammas) const {
    std::vector<std::size_t> out;
    Matrix theta = Matrix::basis_vector(n_states, alpha);
    for (std::size_t g : gammas) {
      Matrix gamma = Matrix::basis_vector(n_inputs, g);
      out.push_back(hot_index(stp(stp(r, gamma), theta)));
      theta = stp(stp(l, gamma), theta);
    }
    return out;
  }
};

std::size_t checked_total(std::size_t m, std::size_t t_max, const EnumerationBudget& budget) {
  if (t_max > budget.max_horizon) throw BudgetExceeded("horizon exceeds the enumeration budget");
  std::size_t total = 0;
  std::size_t layer = 1;
  for (std::size_t t = 1; t <= t_max; ++t) {
    if (layer > budget.max_sequences / std::max<std::size_t>(m, 1)) throw BudgetExceeded("enumeration budget exceeded");
    layer *= m;
    total += layer;
    if (total > budget.max_sequences)
      throw BudgetExceeded("enumeration of " + std::to_string(total) + "+ sequences exceeds the budget of " +
                           std::to_string(budget.max_sequences));
  }
  return total;
}

std::vector<InputSequence> all_sequences(std::size_t m, std::size_t t) {
  std::vector<InputSequence> out;
  InputSequence seq(t, 1);
  while (true) {
    out.push_back(seq);
    std::size_t i = t;
    while (i > 0 && seq[i - 1] == m) seq[--i] = 1;
    if (i == 0) break;
    ++seq[i - 1];
  }
  return out;
}

Matrix controllability_matrix(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  std::vector<Matrix> cols;
  Matrix p = Matrix::identity(sls.n(), sls.numeric_mode());
  for (std::size_t t = sigmas.size(); t-- > 0;) {
    const Mode& md = sls.mode(sigmas[t]);
    cols.push_back(p * md.b);
    p = p * md.a;
  }
  return hconcat(cols);
}

Matrix observability_matrix(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  std::vector<Matrix> rows;
  Matrix p = Matrix::identity(sls.n(), sls.numeric_mode());
  for (std::size_t s : sigmas) {
    const Mode& md = sls.mode(s);
    rows.push_back(md.c * p);
    p = md.a * p;
  }
  return vconcat(rows);
}

Matrix transition_product(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  Matrix p = Matrix::identity(sls.n(), sls.numeric_mode());
  for (std::size_t s : sigmas) p = sls.mode(s).a * p;
  return p;
}

}  // namespace

std::vector<EnumeratedSequence> enumerate_switching_sequences(const LogicalNetwork& net, std::size_t alpha,
                                                              std::size_t horizon, const EnumerationBudget& budget) {
  if (alpha < 1 || alpha > net.states()) throw IndexError("initial logical state out of range");
  std::vector<EnumeratedSequence> out;
  if (horizon == 0) return {EnumeratedSequence{}};
  if (horizon > budget.max_horizon) throw BudgetExceeded("horizon exceeds the enumeration budget");
  std::size_t count = 1;
  for (std::size_t t = 0; t < horizon; ++t) {
    count *= net.inputs();
    if (count > budget.max_sequences) throw BudgetExceeded("enumeration budget exceeded");
  }
  DenseReplay replay(net);
  for (auto& g : all_sequences(net.inputs(), horizon)) {
    EnumeratedSequence e;
    e.sigmas = replay.sigmas(alpha, g);
    e.gammas = std::move(g);
    out.push_back(std::move(e));
  }
  return out;
}

std::size_t kalman_rank(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  return rank(controllability_matrix(sigmas, sls));
}

std::size_t obsv_rank(const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  return rank(observability_matrix(sigmas, sls));
}

bool rank_condition_holds(Property property, const std::vector<std::size_t>& sigmas, const SwitchedLinearSystem& sls) {
  switch (property) {
    case Property::Reachability:
      return kalman_rank(sigmas, sls) == sls.n();
    case Property::Controllability: {
      Matrix k = controllability_matrix(sigmas, sls);
      Matrix both[2] = {k, transition_product(sigmas, sls)};
      return rank(k) == rank(hconcat(both));
    }
    case Property::Observability:
      return obsv_rank(sigmas, sls) == sls.n();
    case Property::Reconstructibility: {
      Matrix o = observability_matrix(sigmas, sls);
      Matrix both[2] = {o, transition_product(sigmas, sls)};
      return rank(o) == rank(vconcat(both));
    }
  }
  return false;
}

PropertyVerdict kalman_oracle(const SwitchedLinearSystem& sls, const LogicalNetwork& net, Property property,
                              const std::vector<std::size_t>& alphas, std::size_t t_max,
                              const EnumerationBudget& budget) {
  if (net.signals() != sls.q()) throw DimensionError("signal range does not match the number of modes");
  for (std::size_t a : alphas)
    if (a < 1 || a > net.states()) throw IndexError("initial logical state out of range");
  checked_total(net.inputs(), t_max, budget);
  DenseReplay replay(net);
  PropertyVerdict v;
  v.property = property;
  v.checked_alphas = alphas;
  for (std::size_t t = 1; t <= t_max; ++t) {
    v.horizon = t;
    for (const auto& g : all_sequences(net.inputs(), t)) {
      ++v.sequences_examined;
      bool all = true;
      for (std::size_t a : alphas)
        if (!rank_condition_holds(property, replay.sigmas(a, g), sls)) {
          all = false;
          break;
        }
      if (!all) continue;
      if (!v.witness) v.witness = g;
      v.witnesses_at_horizon.push_back(g);
    }
    if (v.witness) {
      v.holds = true;
      for (std::size_t a : alphas) {
        AlphaDetail d;
        auto s = replay.sigmas(a, *v.witness);
        d.span_rank = is_dual_property(property) ? obsv_rank(s, sls) : kalman_rank(s, sls);
        d.contained = d.passes = true;
        v.per_alpha.emplace(a, d);
      }
      return v;
    }
  }
  return v;
}

namespace {

struct PathCounter {
  const LogicalNetwork& net;
  const std::vector<bool>& target;
  std::size_t budget;
  std::size_t visited = 0;

  std::size_t count(std::size_t index, std::size_t remaining) {
    if (++visited > budget) throw BudgetExceeded("path enumeration budget exceeded");
    if (remaining == 0) return target[index - 1] ? 1 : 0;
    const std::size_t n = net.states();
    std::size_t next_theta = net.transition()[index];
    std::size_t total = 0;
    for (std::size_t g = 1; g <= net.inputs(); ++g) total += count((g - 1) * n + next_theta, remaining - 1);
    return total;
  }
};

}  // namespace

std::size_t count_paths(const LogicalNetwork& net, const std::vector<std::size_t>& from,
                        const std::vector<std::size_t>& to, std::size_t ell, const EnumerationBudget& budget) {
  const std::size_t mn = net.states() * net.inputs();
  std::vector<bool> target(mn, false);
  for (std::size_t j : to) {
    if (j < 1 || j > mn) throw IndexError("input-state index out of range");
    target[j - 1] = true;
  }
  PathCounter pc{net, target, budget.max_sequences};
  std::size_t total = 0;
  for (std::size_t j : from) {
    if (j < 1 || j > mn) throw IndexError("input-state index out of range");
    total += pc.count(j, ell);
  }
  return total;
}

}  // namespace stpsw
