#include "stpsw/analysis.hpp"

#include <stdexcept>

#include "stpsw/attractors.hpp"
#include "stpsw/errors.hpp"

namespace stpsw {

namespace {

void check_sequence(const LogicalNetwork& net, std::size_t alpha, const InputSequence& gammas) {
  if (alpha < 1 || alpha > net.states()) throw IndexError("initial logical state out of range");
  if (gammas.empty()) throw IndexError("logical input sequence is empty");
  for (std::size_t g : gammas)
    if (g < 1 || g > net.inputs()) throw IndexError("logical input out of range");
}

/// Nonzero blocks met along the trajectory: G-block and H-block of column θ_t in X_{γ_t}.
struct Chain {
  std::vector<Matrix> g;
  std::vector<Matrix> h;
  std::size_t terminal = 0;
};

Chain block_chain(const MergedSystem& ms, std::size_t alpha, const InputSequence& gammas) {
  check_sequence(ms.net, alpha, gammas);
  Chain c;
  std::size_t theta = alpha;
  for (std::size_t gamma : gammas) {
    c.g.push_back(ms.g.nonzero_block(gamma, theta));
    c.h.push_back(ms.h.nonzero_block(gamma, theta));
    std::size_t next = ms.g.target(gamma, theta);
    if (next != ms.h.target(gamma, theta)) throw std::logic_error("G and H block targets disagree");
    theta = next;
  }
  c.terminal = theta;
  return c;
}

/// Term generators and the free-motion product of a chain.
std::pair<std::vector<Matrix>, Matrix> chain_products(const MergedSystem& ms, const Chain& c) {
  const std::size_t t_len = c.g.size();
  std::vector<Matrix> terms(t_len);
  Matrix p = Matrix::identity(ms.g.block_rows(), ms.sls.numeric_mode());
  if (ms.kind == MergeKind::Primal) {
    for (std::size_t t = t_len; t-- > 0;) {
      terms[t] = p * c.h[t];
      p = p * c.g[t];
    }
  } else {
    for (std::size_t t = 0; t < t_len; ++t) {
      terms[t] = p * c.h[t];
      p = p * c.g[t];
    }
  }
  return {std::move(terms), std::move(p)};
}

MergeKind required_kind(Property p) { return is_dual_property(p) ? MergeKind::Dual : MergeKind::Primal; }

bool needs_containment(Property p) {
  return p == Property::Controllability || p == Property::Reconstructibility;
}

/// Advances an odometer over [1,m]^T; false after the last tuple.
bool next_tuple(InputSequence& seq, std::size_t m) {
  for (std::size_t i = seq.size(); i-- > 0;) {
    if (seq[i] < m) {
      ++seq[i];
      return true;
    }
    seq[i] = 1;
  }
  return false;
}

}  // namespace

SwitchingTrajectory switching_trajectory(const LogicalNetwork& net, std::size_t alpha, const InputSequence& gammas) {
  check_sequence(net, alpha, gammas);
  SwitchingTrajectory tr;
  tr.thetas.push_back(alpha);
  for (std::size_t gamma : gammas) {
    StepResult s = net.step(gamma, tr.thetas.back());
    tr.sigmas.push_back(s.sigma);
    tr.thetas.push_back(s.theta_next);
  }
  return tr;
}

ReachableSet reachable_set(const MergedSystem& ms, std::size_t alpha, const InputSequence& gammas) {
  Chain c = block_chain(ms, alpha, gammas);
  auto [terms, free] = chain_products(ms, c);
  ReachableSet rs;
  rs.alpha = alpha;
  rs.gammas = gammas;
  rs.terminal_theta = c.terminal;
  for (const Matrix& t : terms) rs.terms.push_back(column_space(t));
  rs.span = subspace_sum(rs.terms);
  return rs;
}

Matrix free_motion(const MergedSystem& ms, std::size_t alpha, const InputSequence& gammas) {
  return chain_products(ms, block_chain(ms, alpha, gammas)).second;
}

std::vector<std::size_t> checked_alphas(const LogicalNetwork& net, const SearchOptions& options) {
  if (options.alphas) {
    for (std::size_t a : *options.alphas)
      if (a < 1 || a > net.states()) throw IndexError("checked logical state out of range");
    return *options.alphas;
  }
  if (options.strict) {
    std::vector<std::size_t> all(net.states());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i + 1;
    return all;
  }
  return control_attractors(net).checked_states();
}

AlphaDetail evaluate_alpha(const MergedSystem& ms, Property property, std::size_t alpha, const InputSequence& gammas) {
  if (ms.kind != required_kind(property))
    throw std::invalid_argument(to_string(property) + " needs a " +
                                (is_dual_property(property) ? "dual" : "primal") + " merged system");
  Chain c = block_chain(ms, alpha, gammas);
  auto [terms, free] = chain_products(ms, c);
  Matrix gens = hconcat(terms);
  AlphaDetail d;
  d.terminal_theta = c.terminal;
  d.span_rank = rank(gens);
  const std::size_t n = ms.g.block_rows();
  if (needs_containment(property)) {
    Matrix both[2] = {gens, free};
    d.contained = rank(hconcat(both)) == d.span_rank;
    d.passes = d.contained;
  } else {
    d.contained = d.span_rank == n;
    d.passes = d.contained;
  }
  return d;
}

bool sequence_passes(const MergedSystem& ms, Property property, const std::vector<std::size_t>& alphas,
                     const InputSequence& gammas) {
  for (std::size_t a : alphas)
    if (!evaluate_alpha(ms, property, a, gammas).passes) return false;
  return true;
}

PropertyVerdict check_property(const MergedSystem& ms, Property property, const SearchOptions& options) {
  if (ms.kind != required_kind(property))
    throw std::invalid_argument(to_string(property) + " needs a " +
                                (is_dual_property(property) ? "dual" : "primal") + " merged system");
  PropertyVerdict v;
  v.property = property;
  v.strict = options.strict && !options.alphas;
  v.checked_alphas = checked_alphas(ms.net, options);
  const std::size_t t_max = options.t_max.value_or(ms.sls.n());
  const std::size_t m = ms.net.inputs();

  for (std::size_t t = 1; t <= t_max; ++t) {
    v.horizon = t;
    InputSequence seq(t, 1);
    std::size_t best_score = 0;
    bool have_best = false;
    do {
      if (++v.sequences_examined > options.max_sequences)
        throw BudgetExceeded("sequence search exceeded " + std::to_string(options.max_sequences) + " candidates");
      std::map<std::size_t, AlphaDetail> details;
      std::size_t passing = 0;
      std::size_t rank_sum = 0;
      for (std::size_t a : v.checked_alphas) {
        AlphaDetail d = evaluate_alpha(ms, property, a, seq);
        passing += d.passes ? 1 : 0;
        rank_sum += d.span_rank;
        details.emplace(a, d);
      }
      if (passing == v.checked_alphas.size()) {
        if (!v.witness) {
          v.witness = seq;
          v.per_alpha = std::move(details);
        }
        v.witnesses_at_horizon.push_back(seq);
      } else if (!v.witness && t == t_max) {
        std::size_t score = passing * (ms.sls.n() * t_max + 1) * 2 + rank_sum;
        if (!have_best || score > best_score) {
          best_score = score;
          have_best = true;
          v.per_alpha = std::move(details);
        }
      }
    } while (next_tuple(seq, m));
    if (v.witness) {
      v.holds = true;
      return v;
    }
  }
  return v;
}

PropertyVerdict check_reachability(const MergedSystem& ms, const SearchOptions& options) {
  return check_property(ms, Property::Reachability, options);
}
PropertyVerdict check_controllability(const MergedSystem& ms, const SearchOptions& options) {
  return check_property(ms, Property::Controllability, options);
}
PropertyVerdict check_observability(const MergedSystem& ms_dual, const SearchOptions& options) {
  return check_property(ms_dual, Property::Observability, options);
}
PropertyVerdict check_reconstructibility(const MergedSystem& ms_dual, const SearchOptions& options) {
  return check_property(ms_dual, Property::Reconstructibility, options);
}

FeasibleSequences feasible_input_sequences(const MergedSystem& ms, std::size_t k_max,
                                           const std::optional<std::vector<std::size_t>>& alphas,
                                           std::size_t max_sequences) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  SearchOptions opts;
  opts.alphas = alphas;
  opts.t_max = k_max;
  opts.max_sequences = max_sequences;
  FeasibleSequences out;
  out.alphas = checked_alphas(ms.net, opts);
  std::size_t examined = 0;
  // Every input gives an edge of the transition graph, so the paths of length k from an
  // attractor are exactly the M^k input tuples replayed from it.
  for (std::size_t k = 1; k <= k_max; ++k) {
    InputSequence seq(k, 1);
    do {
      if (++examined > max_sequences)
        throw BudgetExceeded("feasible-sequence search exceeded " + std::to_string(max_sequences) + " candidates");
      if (!sequence_passes(ms, Property::Reachability, out.alphas, seq)) continue;
      FeasibleSequence fs;
      fs.gammas = seq;
      for (std::size_t a : out.alphas) fs.trajectories.emplace(a, switching_trajectory(ms.net, a, seq));
      out.sequences.push_back(std::move(fs));
    } while (next_tuple(seq, ms.net.inputs()));
    if (!out.sequences.empty()) {
      out.k = k;
      return out;
    }
  }
  return out;
}

}  // namespace stpsw
