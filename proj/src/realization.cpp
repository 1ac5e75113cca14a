#include "stpsw/realization.hpp"

#include <stdexcept>

#include "stpsw/errors.hpp"
#include "stpsw/set_reachability.hpp"

namespace stpsw {

bool check_one_step_universal(const LogicalNetwork& net) {
  const std::size_t n = net.states();
  BooleanMatrix sum(n, n);
  for (std::size_t g = 1; g <= net.inputs(); ++g)
    sum = boolean_sum(sum, BooleanMatrix::from_logical(net.transition_block(g)));
  return sum.all_ones();
}

BooleanMatrix SignalPreimage::singleton_matrix(std::size_t mn) const {
  BooleanMatrix p(mn, members.size());
  for (std::size_t j = 0; j < members.size(); ++j) p.set(members[j] - 1, j, true);
  return p;
}

BooleanMatrix SignalPreimage::index_vector(std::size_t mn) const {
  BooleanMatrix v(mn, 1);
  for (std::size_t m : members) v.set(m - 1, 0, true);
  return v;
}

BooleanMatrix SignalPreimage::complement_vector(std::size_t mn) const {
  BooleanMatrix v(mn, 1, true);
  for (std::size_t m : members) v.set(m - 1, 0, false);
  return v;
}

std::vector<SignalPreimage> signal_preimages(const LogicalNetwork& net) {
  std::vector<SignalPreimage> out(net.signals());
  for (std::size_t i = 0; i < out.size(); ++i) out[i].sigma = i + 1;
  for (std::size_t j = 1; j <= net.input_states(); ++j) out[net.signal()[j] - 1].members.push_back(j);
  return out;
}

namespace {

DurationClass classify(std::size_t d) {
  if (d == 1) return DurationClass::One;
  if (d == FotSpec::infinity) return DurationClass::Infinite;
  return DurationClass::Finite;
}

SignalDiagnostic diagnose(const BooleanMatrix& big_l, const SignalPreimage& pre, bool escape, bool stay) {
  SignalDiagnostic d;
  d.sigma = pre.sigma;
  d.requires_escape = escape;
  d.requires_stay = stay;
  if (pre.empty()) {
    d.signal_unreachable = true;
    return d;
  }
  const std::size_t mn = big_l.rows();
  BooleanMatrix successors = boolean_product(big_l, pre.singleton_matrix(mn));
  if (escape) {
    BooleanMatrix row = boolean_product(pre.complement_vector(mn).transpose(), successors);
    for (std::size_t j = 0; j < pre.members.size(); ++j)
      if (!row(0, j)) d.failing_escape.push_back(pre.members[j]);
  }
  if (stay) {
    BooleanMatrix row = boolean_product(pre.index_vector(mn).transpose(), successors);
    for (std::size_t j = 0; j < pre.members.size(); ++j)
      if (!row(0, j)) d.failing_stay.push_back(pre.members[j]);
  }
  d.satisfied = d.failing_escape.empty() && d.failing_stay.empty();
  return d;
}

void finish(RealizationVerdict& v) {
  for (const auto& d : v.signals) {
    if (!d.satisfied) v.realizable = false;
    if (d.signal_unreachable)
      v.warnings.push_back("signal " + std::to_string(d.sigma) + " is never produced; its conditions hold vacuously");
  }
}

}  // namespace

RealizationVerdict check_fot_realizable(const LogicalNetwork& net, const FotSpec& spec) {
  if (spec.durations.size() != net.signals())
    throw DimensionError("expected " + std::to_string(net.signals()) + " operating times, got " +
                         std::to_string(spec.durations.size()));
  for (std::size_t d : spec.durations)
    if (d < 1) throw std::invalid_argument("operating times must be at least 1");
  BooleanMatrix big_l = input_state_matrix(net);
  RealizationVerdict v;
  for (const auto& pre : signal_preimages(net)) {
    DurationClass c = classify(spec.durations[pre.sigma - 1]);
    bool escape = c != DurationClass::Infinite;
    bool stay = c != DurationClass::One;
    SignalDiagnostic d = diagnose(big_l, pre, escape, stay);
    d.duration_class = c;
    v.signals.push_back(std::move(d));
  }
  finish(v);
  return v;
}

RealizationVerdict check_dwell_time_realizable(const LogicalNetwork& net, const std::vector<std::size_t>& min_dwell) {
  if (min_dwell.size() != net.signals())
    throw DimensionError("expected " + std::to_string(net.signals()) + " dwell times, got " +
                         std::to_string(min_dwell.size()));
  for (std::size_t d : min_dwell)
    if (d < 1) throw std::invalid_argument("dwell times must be at least 1");
  BooleanMatrix big_l = input_state_matrix(net);
  RealizationVerdict v;
  for (const auto& pre : signal_preimages(net)) {
    SignalDiagnostic d = diagnose(big_l, pre, true, true);
    d.duration_class = classify(min_dwell[pre.sigma - 1]);
    v.signals.push_back(std::move(d));
  }
  finish(v);
  return v;
}

TrackingVerdict check_trackable(const LogicalNetwork& net, const TrackingProblem& problem) {
  if (problem.theta0 < 1 || problem.theta0 > net.states()) throw IndexError("initial logical state out of range");
  if (problem.reference.empty()) throw std::invalid_argument("reference sequence is empty");
  for (std::size_t s : problem.reference)
    if (s < 1 || s > net.signals()) throw IndexError("reference signal out of range");

  const std::size_t mn = net.input_states();
  const auto pre = signal_preimages(net);
  BooleanMatrix big_l = input_state_matrix(net);
  TrackingVerdict v;

  std::vector<BooleanMatrix> frontier;
  // links[t][j]: chosen predecessor (1-based) in ϑ(t-1) of member j+1 of ϑ(t).
  std::vector<std::vector<std::size_t>> links;

  BooleanMatrix start(mn, 1);
  for (std::size_t g = 1; g <= net.inputs(); ++g) start.set(net.encode(g, problem.theta0) - 1, 0, true);
  frontier.push_back(logical_and(start, pre[problem.reference[0] - 1].index_vector(mn)));
  links.emplace_back();
  v.frontier_sizes.push_back(frontier.back().count());
  if (!frontier.back().any()) {
    v.first_failing_t = 0;
    return v;
  }

  for (std::size_t t = 1; t < problem.reference.size(); ++t) {
    const BooleanMatrix& prev = frontier.back();
    BooleanMatrix next = logical_and(boolean_product(big_l, prev), pre[problem.reference[t] - 1].index_vector(mn));
    std::vector<std::size_t> link(mn, 0);
    for (std::size_t s = 1; s <= mn; ++s) {
      if (!prev(s - 1, 0)) continue;
      InputState is = net.decode(s);
      std::size_t target = net.next_state(is.gamma, is.theta);
      for (std::size_t g = 1; g <= net.inputs(); ++g) {
        std::size_t j = net.encode(g, target);
        if (next(j - 1, 0) && link[j - 1] == 0) link[j - 1] = s;
      }
    }
    v.frontier_sizes.push_back(next.count());
    if (!next.any()) {
      v.first_failing_t = t;
      return v;
    }
    frontier.push_back(std::move(next));
    links.push_back(std::move(link));
  }

  const std::size_t tau = frontier.size() - 1;
  std::size_t cur = 0;
  for (std::size_t j = 1; j <= mn; ++j)
    if (frontier[tau](j - 1, 0)) {
      cur = j;
      break;
    }
  std::vector<std::size_t> witness(tau + 1);
  for (std::size_t t = tau + 1; t-- > 0;) {
    witness[t] = net.decode(cur).gamma;
    if (t > 0) cur = links[t][cur - 1];
  }
  v.trackable = true;
  v.witness = std::move(witness);
  return v;
}

}  // namespace stpsw
