#include <catch_amalgamated.hpp>

#include <random>

#include "stpsw/analysis.hpp"
#include "stpsw/attractors.hpp"
#include "stpsw/errors.hpp"
#include "stpsw/oracle.hpp"
#include "support/systems.hpp"

using namespace stpsw;
using namespace stpsw::testing;

namespace {

const std::vector<InputSequence> kFive = {{1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}, {2, 2, 2}};

/// Im(A_{σ_{T-1}}···A_{σ_{t+1}} B_{σ_t}) computed straight from the modes.
Subspace direct_term(const SwitchedLinearSystem& sls, const std::vector<std::size_t>& sigmas, std::size_t t) {
  Matrix p = sls.mode(sigmas[t]).b;
  for (std::size_t s = t + 1; s < sigmas.size(); ++s) p = sls.mode(sigmas[s]).a * p;
  return column_space(p);
}

SwitchedLinearSystem with_zero_inputs(const SwitchedLinearSystem& sls) {
  std::vector<Mode> modes = sls.modes();
  for (auto& m : modes) m.b = Matrix(m.b.rows(), m.b.cols());
  return SwitchedLinearSystem(modes);
}

}  // namespace

TEST_CASE("switching trajectory replays the network", "[analysis]") {
  SwitchingTrajectory tr = switching_trajectory(two_mode_net(), 4, {2, 2, 2});
  CHECK(tr.thetas == std::vector<std::size_t>{4, 3, 3, 3});
  CHECK(tr.sigmas == std::vector<std::size_t>{1, 2, 2});
  LogicalNetwork constant(3, 2, LogicalMatrix(3, {2, 2, 2, 2, 2, 2}), LogicalMatrix(1, {1, 1, 1, 1, 1, 1}));
  CHECK(switching_trajectory(constant, 1, {1, 2, 1}).thetas == std::vector<std::size_t>{1, 2, 2, 2});
  CHECK_THROWS_AS(switching_trajectory(two_mode_net(), 5, {1}), IndexError);
  CHECK_THROWS_AS(switching_trajectory(two_mode_net(), 1, {3}), IndexError);
  CHECK_THROWS_AS(switching_trajectory(two_mode_net(), 1, {}), IndexError);
}

TEST_CASE("reachable set of the example along (2,2,2)", "[analysis]") {
  MergedSystem ms = merge(two_mode_sls(), two_mode_net());
  ReachableSet rs = reachable_set(ms, 4, {2, 2, 2});
  CHECK(rs.terms.size() == 3);
  CHECK(rs.span.is_full());
  CHECK(rs.terminal_theta == 3);
  CHECK(rs.span == subspace_sum(rs.terms));
  // Cross-module: oracle Kalman rank along the induced switching sequence (1,2,2).
  CHECK(kalman_rank({1, 2, 2}, ms.sls) == rs.span.rank());
}

TEST_CASE("block-chain terms equal direct mode products", "[analysis]") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 25; ++trial) {
    RandomShape s = random_shape(rng);
    SwitchedLinearSystem sls = random_sls(rng, s);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, s.q);
    MergedSystem ms = merge(sls, net);
    for (std::size_t t = 1; t <= 4; ++t)
      for (const auto& g : all_tuples(s.inputs, t))
        for (std::size_t a = 1; a <= s.states; ++a) {
          ReachableSet rs = reachable_set(ms, a, g);
          SwitchingTrajectory tr = switching_trajectory(net, a, g);
          REQUIRE(rs.terms.size() == t);
          for (std::size_t k = 0; k < t; ++k) CHECK(rs.terms[k] == direct_term(sls, tr.sigmas, k));
          CHECK(rs.terminal_theta == tr.thetas.back());
          CHECK(rs.span.rank() <= s.n);
        }
  }
}

TEST_CASE("single mode reduces to the classical controllability subspace", "[analysis]") {
  std::mt19937 rng(37);
  for (int trial = 0; trial < 20; ++trial) {
    RandomShape s = random_shape(rng, 3, 1, 3, 2);
    SwitchedLinearSystem sls = random_sls(rng, s);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, 1);
    MergedSystem ms = merge(sls, net);
    const Mode& md = sls.mode(1);
    std::vector<Matrix> blocks;
    Matrix p = md.b;
    for (std::size_t k = 0; k < s.n; ++k) {
      blocks.push_back(p);
      p = md.a * p;
    }
    Subspace kalman = column_space(hconcat(blocks));
    CHECK(reachable_set(ms, 1, InputSequence(s.n, 1)).span == kalman);
  }
}

TEST_CASE("the example is reachable and controllable at attractor 4", "[analysis]") {
  MergedSystem ms = merge(two_mode_sls(), two_mode_net());
  PropertyVerdict r = check_reachability(ms);
  CHECK(r.holds);
  CHECK(r.horizon == 3);
  CHECK(r.checked_alphas == std::vector<std::size_t>{4});
  CHECK(r.witnesses_at_horizon == kFive);
  CHECK(r.witness == InputSequence{1, 2, 2});
  CHECK(r.per_alpha.at(4).span_rank == 3);
  PropertyVerdict c = check_controllability(ms);
  CHECK(c.holds);
  CHECK(c.witnesses_at_horizon == kFive);
}

TEST_CASE("the example is observable and reconstructible at attractor 4", "[analysis]") {
  MergedSystem dual = merge_dual(two_mode_sls(), two_mode_net());
  std::vector<InputSequence> all_but_last = all_tuples(2, 3);
  all_but_last.pop_back();  // (2,2,2)
  for (auto v : {check_observability(dual), check_reconstructibility(dual)}) {
    CHECK(v.holds);
    CHECK(v.horizon == 3);
    CHECK(v.witnesses_at_horizon == all_but_last);
  }
  // Along (2,2,2) from 4 the switching sequence is (1,2,2): output rank falls short.
  CHECK(evaluate_alpha(dual, Property::Observability, 4, {2, 2, 2}).span_rank < 3);
}

TEST_CASE("strict mode checks every initial state", "[analysis]") {
  MergedSystem ms = merge(two_mode_sls(), two_mode_net());
  SearchOptions strict;
  strict.strict = true;
  PropertyVerdict r = check_reachability(ms, strict);
  CHECK(r.strict);
  CHECK(r.checked_alphas == std::vector<std::size_t>{1, 2, 3, 4});
  CHECK(r.holds);
  for (const auto& w : r.witnesses_at_horizon)
    for (std::size_t a = 1; a <= 4; ++a) CHECK(rank_condition_holds(Property::Reachability, switching_trajectory(ms.net, a, w).sigmas, ms.sls));
}

TEST_CASE("zero input matrices make the system unreachable", "[analysis]") {
  SwitchedLinearSystem sls = with_zero_inputs(two_mode_sls());
  MergedSystem ms = merge(sls, two_mode_net());
  for (const auto& g : all_tuples(2, 3)) CHECK(reachable_set(ms, 4, g).span.rank() == 0);
  SearchOptions o;
  o.t_max = 5;
  CHECK_FALSE(check_reachability(ms, o).holds);
  CHECK(feasible_input_sequences(ms, 4).sequences.empty());
  CHECK(feasible_input_sequences(ms, 4).k == 0);
}

TEST_CASE("nilpotent free motion is controllable without being reachable", "[analysis]") {
  Mode m{Matrix::from_rows({{0, 1}, {0, 0}}), Matrix(2, 1), Matrix::from_rows({{1, 0}})};
  SwitchedLinearSystem sls({m});
  LogicalNetwork net(1, 1, LogicalMatrix::identity(1), LogicalMatrix(1, {1}));
  MergedSystem ms = merge(sls, net);
  CHECK_FALSE(check_reachability(ms).holds);
  PropertyVerdict c = check_controllability(ms);
  CHECK(c.holds);
  CHECK(c.horizon == 2);
}

TEST_CASE("zero output matrices make the system unobservable", "[analysis]") {
  std::vector<Mode> modes = two_mode_sls().modes();
  for (auto& m : modes) m.c = Matrix(1, 3);
  MergedSystem dual = merge_dual(SwitchedLinearSystem(modes), two_mode_net());
  CHECK_FALSE(check_observability(dual).holds);
}

TEST_CASE("single mode observability is the classical rank test", "[analysis]") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    RandomShape s = random_shape(rng, 3, 1, 2, 2);
    SwitchedLinearSystem sls = random_sls(rng, s);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, 1);
    const Mode& md = sls.mode(1);
    std::vector<Matrix> rows;
    Matrix p = md.c;
    for (std::size_t k = 0; k < s.n; ++k) {
      rows.push_back(p);
      p = p * md.a;
    }
    bool classical = rank(vconcat(rows)) == s.n;
    CHECK(check_observability(merge_dual(sls, net)).holds == classical);
  }
}

TEST_CASE("invertible modes: reachability matches controllability, observability matches reconstructibility",
          "[analysis]") {
  std::mt19937 rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    RandomShape s = random_shape(rng);
    SwitchedLinearSystem sls = random_sls(rng, s, true);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, s.q);
    MergedSystem ms = merge(sls, net), dual = merge_dual(sls, net);
    for (bool strict : {false, true}) {
      SearchOptions o;
      o.strict = strict;
      CHECK(check_reachability(ms, o).holds == check_controllability(ms, o).holds);
      CHECK(check_observability(dual, o).holds == check_reconstructibility(dual, o).holds);
    }
  }
}

TEST_CASE("attractor reduction is sound", "[analysis]") {
  std::mt19937 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    RandomShape s = random_shape(rng);
    bool invertible = trial % 2 == 0;
    SwitchedLinearSystem sls = random_sls(rng, s, invertible);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, s.q);
    MergedSystem ms = merge(sls, net), dual = merge_dual(sls, net);
    ControlAttractorReport attractors = control_attractors(net);
    for (Property p : {Property::Reachability, Property::Controllability, Property::Observability,
                       Property::Reconstructibility}) {
      const MergedSystem& m = is_dual_property(p) ? dual : ms;
      SearchOptions strict;
      strict.strict = true;
      PropertyVerdict all = check_property(m, p, strict);
      PropertyVerdict reduced = check_property(m, p);
      // Strict success implies reduced success.
      if (all.holds) CHECK(reduced.holds);
      if (!reduced.holds) continue;
      if (p == Property::Observability && !invertible) continue;
      // From any initial state: steer into the covering attractor, then apply the witness.
      for (std::size_t t0 = 1; t0 <= s.states; ++t0) {
        const ControlAttractor& a = attractors.covering(t0);
        auto prefix = steering_inputs(net, t0, a.representative());
        REQUIRE(prefix);
        InputSequence full = *prefix;
        full.insert(full.end(), reduced.witness->begin(), reduced.witness->end());
        CHECK(rank_condition_holds(p, switching_trajectory(net, t0, full).sigmas, sls));
      }
    }
  }
}

TEST_CASE("witnesses replay successfully", "[analysis]") {
  std::mt19937 rng(53);
  for (int trial = 0; trial < 30; ++trial) {
    RandomShape s = random_shape(rng);
    SwitchedLinearSystem sls = random_sls(rng, s);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, s.q);
    MergedSystem ms = merge(sls, net), dual = merge_dual(sls, net);
    for (Property p : {Property::Reachability, Property::Controllability, Property::Observability,
                       Property::Reconstructibility}) {
      const MergedSystem& m = is_dual_property(p) ? dual : ms;
      PropertyVerdict v = check_property(m, p);
      if (!v.holds) continue;
      REQUIRE(v.witness);
      CHECK(v.witness->size() == v.horizon);
      CHECK(sequence_passes(m, p, v.checked_alphas, *v.witness));
      for (std::size_t a : v.checked_alphas)
        CHECK(rank_condition_holds(p, switching_trajectory(net, a, *v.witness).sigmas, sls));
      for (const auto& w : v.witnesses_at_horizon) CHECK(sequence_passes(m, p, v.checked_alphas, w));
    }
  }
}

TEST_CASE("feasible input sequences at attractor 4", "[analysis]") {
  MergedSystem ms = merge(two_mode_sls(), two_mode_net());
  FeasibleSequences f = feasible_input_sequences(ms, 3);
  CHECK(f.k == 3);
  CHECK(f.alphas == std::vector<std::size_t>{4});
  std::vector<InputSequence> got;
  for (const auto& s : f.sequences) {
    got.push_back(s.gammas);
    CHECK(s.trajectories.at(4).thetas.front() == 4);
    CHECK(sequence_passes(ms, Property::Reachability, f.alphas, s.gammas));
  }
  CHECK(got == kFive);
  CHECK(feasible_input_sequences(ms, 2).sequences.empty());
  CHECK_THROWS(feasible_input_sequences(ms, 0));
}

TEST_CASE("search guards", "[analysis]") {
  MergedSystem ms = merge(two_mode_sls(), two_mode_net());
  MergedSystem dual = merge_dual(two_mode_sls(), two_mode_net());
  CHECK_THROWS_AS(check_observability(ms), std::invalid_argument);
  CHECK_THROWS_AS(check_reachability(dual), std::invalid_argument);
  SearchOptions tiny;
  tiny.max_sequences = 5;
  CHECK_THROWS_AS(check_reachability(ms, tiny), BudgetExceeded);
  SearchOptions bad;
  bad.alphas = std::vector<std::size_t>{9};
  CHECK_THROWS_AS(check_reachability(ms, bad), IndexError);
}
