#include <catch_amalgamated.hpp>

#include <random>

#include "stpsw/analysis.hpp"
#include "stpsw/errors.hpp"
#include "stpsw/oracle.hpp"
#include "stpsw/set_reachability.hpp"
#include "support/systems.hpp"

using namespace stpsw;
using namespace stpsw::testing;

TEST_CASE("switching sequence enumeration", "[oracle]") {
  LogicalNetwork single(3, 1, LogicalMatrix(3, {2, 3, 1}), LogicalMatrix(2, {1, 2, 1}));
  for (std::size_t t = 1; t <= 4; ++t) CHECK(enumerate_switching_sequences(single, 1, t).size() == 1);
  CHECK(enumerate_switching_sequences(single, 1, 3)[0].sigmas == std::vector<std::size_t>{1, 2, 1});

  LogicalNetwork net = two_mode_net();
  auto one = enumerate_switching_sequences(net, 4, 1);
  REQUIRE(one.size() == 2);
  // Columns 4 and 8 of R.
  CHECK(one[0].sigmas == std::vector<std::size_t>{1});
  CHECK(one[1].sigmas == std::vector<std::size_t>{1});
  for (std::size_t t = 1; t <= 6; ++t) CHECK(enumerate_switching_sequences(net, 2, t).size() == (1u << t));
  auto three = enumerate_switching_sequences(net, 4, 3);
  CHECK(three.back().gammas == InputSequence{2, 2, 2});
  CHECK(three.back().sigmas == std::vector<std::size_t>{1, 2, 2});

  EnumerationBudget tight;
  tight.max_sequences = 10;
  CHECK_THROWS_AS(enumerate_switching_sequences(net, 1, 4, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_switching_sequences(net, 9, 1), IndexError);
}

TEST_CASE("Kalman and observability ranks", "[oracle]") {
  // Controllable canonical pair.
  Mode m{Matrix::from_rows({{0, 1, 0}, {0, 0, 1}, {1, 2, 3}}), Matrix::from_rows({{0}, {0}, {1}}),
         Matrix::from_rows({{1, 0, 0}})};
  SwitchedLinearSystem sls({m});
  CHECK(kalman_rank({1, 1, 1}, sls) == 3);
  CHECK(obsv_rank({1, 1, 1}, sls) == 3);
  CHECK(kalman_rank({1}, sls) == 1);
  Mode zero{m.a, Matrix(3, 1), m.c};
  CHECK(kalman_rank({1, 1, 1}, SwitchedLinearSystem({zero})) == 0);
  CHECK(kalman_rank({1, 2, 2}, two_mode_sls()) == 3);
  CHECK(obsv_rank({1, 2, 2}, two_mode_sls()) < 3);
}

TEST_CASE("path counting", "[oracle]") {
  LogicalNetwork net = four_state_net();
  CHECK(count_paths(net, {4, 6}, {5, 7, 8}, 2) == 4);
  CHECK(count_paths(net, {4, 6}, {1, 2, 3}, 2) == 2);
  CHECK(count_paths(net, {4, 6}, {1, 2, 3}, 1) == 0);
  CHECK(count_paths(net, {4, 6}, {5, 7, 8}, 1) == 2);
  CHECK(count_paths(net, {3}, {3}, 0) == 1);
  CHECK(count_paths(net, {3}, {4}, 0) == 0);
  EnumerationBudget tight;
  tight.max_sequences = 50;
  CHECK_THROWS_AS(count_paths(net, {1}, {1}, 10, tight), BudgetExceeded);
  CHECK_THROWS_AS(count_paths(net, {9}, {1}, 1), IndexError);
}

TEST_CASE("path counts equal the quantitative set-reachability entries", "[oracle]") {
  std::mt19937 rng(79);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = uniform(rng, 1, 4), m = uniform(rng, 1, 3);
    LogicalNetwork net = random_net(rng, n, m, 1);
    const std::size_t mn = n * m;
    auto subset = [&] {
      std::vector<std::size_t> s;
      for (std::size_t j = 1; j <= mn; ++j)
        if (uniform(rng, 0, 2) == 0) s.push_back(j);
      if (s.empty()) s.push_back(uniform(rng, 1, mn));
      return s;
    };
    std::vector<std::size_t> a = subset(), b = subset(), c = subset();
    std::size_t ell = uniform(rng, 1, 4);
    Matrix counts = set_reachability_counts(net, SubsetClass{InputStateSubset(a)},
                                            SubsetClass{InputStateSubset(b), InputStateSubset(c)}, ell);
    CHECK(counts.at(0, 0) == Scalar(static_cast<long>(count_paths(net, a, b, ell))));
    CHECK(counts.at(1, 0) == Scalar(static_cast<long>(count_paths(net, a, c, ell))));
  }
}

TEST_CASE("rank oracle agrees with block-form verdicts on the example", "[oracle]") {
  SwitchedLinearSystem sls = two_mode_sls();
  LogicalNetwork net = two_mode_net();
  MergedSystem ms = merge(sls, net), dual = merge_dual(sls, net);
  for (std::vector<std::size_t> alphas : {std::vector<std::size_t>{4}, std::vector<std::size_t>{1, 2, 3, 4}})
    for (Property p : {Property::Reachability, Property::Controllability, Property::Observability,
                       Property::Reconstructibility}) {
      PropertyVerdict o = kalman_oracle(sls, net, p, alphas, 3);
      SearchOptions opts;
      opts.alphas = alphas;
      PropertyVerdict b = check_property(is_dual_property(p) ? dual : ms, p, opts);
      CHECK(o.holds);
      CHECK(o.holds == b.holds);
      CHECK(o.horizon == b.horizon);
      CHECK(o.witnesses_at_horizon == b.witnesses_at_horizon);
    }
}

TEST_CASE("rank oracle agrees with block-form verdicts on random systems", "[oracle]") {
  std::mt19937 rng(83);
  for (int trial = 0; trial < 30; ++trial) {
    RandomShape s = random_shape(rng);
    SwitchedLinearSystem sls = random_sls(rng, s);
    LogicalNetwork net = random_net(rng, s.states, s.inputs, s.q);
    MergedSystem ms = merge(sls, net), dual = merge_dual(sls, net);
    std::vector<std::size_t> alphas(s.states);
    for (std::size_t i = 0; i < s.states; ++i) alphas[i] = i + 1;
    for (Property p : {Property::Reachability, Property::Controllability, Property::Observability,
                       Property::Reconstructibility}) {
      SearchOptions opts;
      opts.alphas = alphas;
      PropertyVerdict b = check_property(is_dual_property(p) ? dual : ms, p, opts);
      PropertyVerdict o = kalman_oracle(sls, net, p, alphas, s.n);
      CHECK(o.holds == b.holds);
      CHECK(o.witnesses_at_horizon == b.witnesses_at_horizon);
    }
  }
}

TEST_CASE("oracle budget and validation", "[oracle]") {
  EnumerationBudget tight;
  tight.max_sequences = 6;
  CHECK_THROWS_AS(kalman_oracle(two_mode_sls(), two_mode_net(), Property::Reachability, {4}, 3, tight),
                  BudgetExceeded);
  LogicalNetwork three_signals(4, 2, LogicalMatrix(4, {1, 1, 2, 4, 4, 4, 3, 3}), LogicalMatrix(3, {1, 2, 3, 1, 2, 3, 1, 2}));
  CHECK_THROWS_AS(kalman_oracle(two_mode_sls(), three_signals, Property::Reachability, {1}, 3), DimensionError);
}
