#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

#include "stpsw/attractors.hpp"
#include "stpsw/errors.hpp"
#include "stpsw/graph_export.hpp"
#include "stpsw/set_reachability.hpp"
#include "stpsw/stp.hpp"
#include "support/systems.hpp"

using namespace stpsw;
using namespace stpsw::testing;

TEST_CASE("network step follows the L and R columns", "[network]") {
  LogicalNetwork net = two_mode_net();
  CHECK(net.states() == 4);
  CHECK(net.inputs() == 2);
  CHECK(net.signals() == 2);
  CHECK(net.step(1, 3) == StepResult{2, 1});
  CHECK(net.step(2, 4) == StepResult{3, 1});
  CHECK(net.encode(2, 3) == 7);
  CHECK(net.decode(7) == InputState{2, 3});
  CHECK(net.transition_block(2) == LogicalMatrix(4, {4, 4, 3, 3}));
  CHECK(net.label(2, 2) == "2×(1,2)");
  CHECK(net.label(1, 4) == "1×(2,2)");
  CHECK_THROWS_AS(net.step(3, 1), IndexError);
  CHECK_THROWS_AS(net.step(1, 5), IndexError);
}

TEST_CASE("step agrees with the dense semi-tensor product", "[network]") {
  LogicalNetwork net = two_mode_net();
  Matrix l = net.transition().dense(), r = net.signal().dense();
  for (std::size_t g = 1; g <= 2; ++g)
    for (std::size_t t = 1; t <= 4; ++t) {
      Matrix gv = Matrix::basis_vector(2, g), tv = Matrix::basis_vector(4, t);
      StepResult s = net.step(g, t);
      CHECK(stp(stp(l, gv), tv) == Matrix::basis_vector(4, s.theta_next));
      CHECK(stp(stp(r, gv), tv) == Matrix::basis_vector(2, s.sigma));
    }
}

TEST_CASE("network construction validates dimensions", "[network]") {
  CHECK_THROWS_AS(LogicalNetwork(4, 2, LogicalMatrix(4, {1, 1, 2, 4, 4, 4, 3}), LogicalMatrix(1, {1, 1, 1, 1, 1, 1, 1})),
                  DimensionError);
  CHECK_THROWS_AS(LogicalNetwork(4, 2, LogicalMatrix(3, {1, 1, 2, 3, 3, 3, 3, 3}), LogicalMatrix(1, std::vector<std::size_t>(8, 1))),
                  DimensionError);
  CHECK_THROWS(LogicalNetwork(4, 2, LogicalMatrix(4, {1, 1, 2, 4, 4, 4, 3, 3}), LogicalMatrix(1, std::vector<std::size_t>(8, 1)),
                              NodeLayout{2, 3, 1}));
}

TEST_CASE("node-wise construction is the Khatri-Rao product of node tables", "[network]") {
  LogicalNetwork ref = four_state_net();
  std::vector<std::vector<std::size_t>> tables(2, std::vector<std::size_t>(8));
  for (std::size_t j = 1; j <= 8; ++j) {
    auto v = node_values(ref.transition()[j], 2, 2);
    tables[0][j - 1] = v[0];
    tables[1][j - 1] = v[1];
  }
  LogicalNetwork built = build_from_functions(2, 2, 1, tables);
  CHECK(built.transition() == ref.transition());
  // Independent check through dense Khatri-Rao products.
  Matrix f1 = LogicalMatrix(2, tables[0]).dense(), f2 = LogicalMatrix(2, tables[1]).dense();
  CHECK(khatri_rao(f1, f2) == ref.transition().dense());
  CHECK(node_values(3, 2, 2) == std::vector<std::size_t>{2, 1});
  CHECK_THROWS(build_from_functions(2, 2, 1, {tables[0]}));
}

TEST_CASE("input-state matrix of the four-state network", "[setreach]") {
  BooleanMatrix big_l = input_state_matrix(four_state_net());
  REQUIRE(big_l.rows() == 8);
  for (std::size_t r = 1; r <= 8; ++r) CHECK(big_l(r - 1, 2) == (r == 2 || r == 6));
  // Column j of **L** equals 1_M ⊗ (L column j).
  Matrix ones = Matrix(2, 1);
  ones.set(0, 0, Scalar(1));
  ones.set(1, 0, Scalar(1));
  LogicalNetwork net = four_state_net();
  CHECK(big_l.to_matrix() == stp(ones, net.transition().dense()));
}

TEST_CASE("set reachability on the layered partition", "[setreach]") {
  LogicalNetwork net = four_state_net();
  SubsetClass initial{InputStateSubset{4, 6}};
  SubsetClass terminal{InputStateSubset{5, 7, 8}, InputStateSubset{1, 2, 3}};
  CHECK(set_reachability_counts(net, initial, terminal, 1) == Matrix::from_rows({{2}, {0}}));
  CHECK(set_reachability_counts(net, initial, terminal, 2) == Matrix::from_rows({{4}, {2}}));
  CHECK(set_reachability_matrix(net, initial, terminal, 1) == BooleanMatrix::from_rows({{1}, {0}}));
  CHECK(set_reachability_matrix(net, initial, terminal, 2) == BooleanMatrix::from_rows({{1}, {1}}));
  auto v1 = set_reachability_verdicts(set_reachability_matrix(net, initial, terminal, 1));
  CHECK(v1.globally_reachable == std::vector<bool>{true, false});
  CHECK_FALSE(v1.reachable_at[0]);
  CHECK_FALSE(v1.fully_reachable);
  auto v2 = set_reachability_verdicts(set_reachability_matrix(net, initial, terminal, 2));
  CHECK(v2.fully_reachable);
  CHECK(InputStateSubset{4, 6}.index_vector(8) == BooleanMatrix::from_rows({{0}, {0}, {0}, {1}, {0}, {1}, {0}, {0}}));
  CHECK_THROWS_AS(InputStateSubset{9}.index_vector(8), IndexError);
  CHECK_THROWS(InputStateSubset(std::vector<std::size_t>{}));
}

TEST_CASE("set reachability counts match brute-force path enumeration", "[setreach]") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = uniform(rng, 1, 5), m = uniform(rng, 1, 3);
    LogicalNetwork net = random_net(rng, n, m, 1);
    const std::size_t mn = n * m;
    std::vector<std::size_t> from{uniform(rng, 1, mn)}, to{uniform(rng, 1, mn), uniform(rng, 1, mn)};
    std::size_t ell = uniform(rng, 1, 4);
    // Enumerate all ℓ-edge walks from `from` explicitly.
    std::vector<std::size_t> frontier = from;
    for (std::size_t s = 0; s < ell; ++s) {
      std::vector<std::size_t> next;
      for (std::size_t j : frontier) {
        auto is = net.decode(j);
        for (std::size_t g = 1; g <= m; ++g) next.push_back(net.encode(g, net.next_state(is.gamma, is.theta)));
      }
      frontier = std::move(next);
    }
    InputStateSubset dst(to);
    long expected = std::count_if(frontier.begin(), frontier.end(), [&](std::size_t j) { return dst.contains(j); });
    Matrix c = set_reachability_counts(net, SubsetClass{InputStateSubset(from)}, SubsetClass{dst}, ell);
    CHECK(c.at(0, 0) == Scalar(expected));
    CHECK(set_reachability_matrix(net, SubsetClass{InputStateSubset(from)}, SubsetClass{dst}, ell)(0, 0) == (expected > 0));
  }
}

namespace {

std::set<std::size_t> brute_basin(const LogicalNetwork& net, const std::set<std::size_t>& target) {
  std::set<std::size_t> basin = target;
  bool grew = true;
  while (grew) {
    grew = false;
    for (std::size_t t = 1; t <= net.states(); ++t) {
      if (basin.count(t)) continue;
      for (std::size_t g = 1; g <= net.inputs(); ++g)
        if (basin.count(net.next_state(g, t))) {
          basin.insert(t);
          grew = true;
          break;
        }
    }
  }
  return basin;
}

void check_attractor(const LogicalNetwork& net, const ControlAttractor& a) {
  REQUIRE(a.states.size() == a.inputs.size());
  REQUIRE(!a.states.empty());
  CHECK(a.states.front() == *std::min_element(a.states.begin(), a.states.end()));
  for (std::size_t i = 0; i < a.states.size(); ++i)
    CHECK(net.next_state(a.inputs[i], a.states[i]) == a.states[(i + 1) % a.states.size()]);
  std::set<std::size_t> s(a.states.begin(), a.states.end());
  CHECK(s.size() == a.states.size());
  auto basin = brute_basin(net, s);
  CHECK(std::vector<std::size_t>(basin.begin(), basin.end()) == a.basin);
}

}  // namespace

TEST_CASE("control attractors of the four-state network", "[attractors]") {
  LogicalNetwork net = two_mode_net();
  ControlAttractorReport r = control_attractors(net);
  std::vector<std::size_t> fps;
  for (const auto& a : r.fixed_points) fps.push_back(a.representative());
  CHECK(fps == std::vector<std::size_t>{1, 3, 4});
  for (const auto& a : r.fixed_points) CHECK(a.basin == std::vector<std::size_t>{1, 2, 3, 4});
  REQUIRE(r.selected.size() == 1);
  CHECK(r.selected[0].representative() == 4);
  CHECK(r.checked_states() == std::vector<std::size_t>{4});
  CHECK(r.covering(2).representative() == 4);
  for (const auto& a : r.fixed_points) check_attractor(net, a);
  for (const auto& a : r.cycles) check_attractor(net, a);
}

TEST_CASE("attractor invariants on random networks", "[attractors]") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    std::size_t n = uniform(rng, 1, 7), m = uniform(rng, 1, 3);
    LogicalNetwork net = random_net(rng, n, m, 1);
    ControlAttractorReport r = control_attractors(net);
    for (const auto& a : r.fixed_points) {
      CHECK(a.states.size() == 1);
      check_attractor(net, a);
    }
    for (const auto& a : r.cycles) {
      CHECK(a.states.size() >= 2);
      check_attractor(net, a);
    }
    // Every self-loop is found as a fixed point.
    for (std::size_t t = 1; t <= n; ++t) {
      bool loop = false;
      for (std::size_t g = 1; g <= m; ++g) loop = loop || net.next_state(g, t) == t;
      bool listed = std::any_of(r.fixed_points.begin(), r.fixed_points.end(),
                                [&](const ControlAttractor& a) { return a.representative() == t; });
      CHECK(loop == listed);
    }
    // Selected basins cover all states.
    std::set<std::size_t> covered;
    for (const auto& a : r.selected) covered.insert(a.basin.begin(), a.basin.end());
    CHECK(covered.size() == n);
    for (std::size_t t = 1; t <= n; ++t) {
      const ControlAttractor& a = r.covering(t);
      CHECK(std::binary_search(a.basin.begin(), a.basin.end(), t));
      auto path = steering_inputs(net, t, a.representative());
      REQUIRE(path.has_value());
      std::size_t cur = t;
      for (std::size_t g : *path) cur = net.next_state(g, cur);
      CHECK(cur == a.representative());
    }
  }
}

TEST_CASE("steering inputs are shortest", "[attractors]") {
  LogicalNetwork net = two_mode_net();
  auto p = steering_inputs(net, 1, 3);
  REQUIRE(p);
  // 1 -> 2 needs input 1 then 2 -> 4 -> 3: no one-step move from 1 reaches 3.
  CHECK(net.next_state(1, 1) != 3);
  CHECK(net.next_state(2, 1) != 3);
  std::size_t cur = 1;
  for (std::size_t g : *p) cur = net.next_state(g, cur);
  CHECK(cur == 3);
  CHECK(steering_inputs(net, 3, 3)->empty());
  LogicalNetwork stuck(2, 1, LogicalMatrix::identity(2), LogicalMatrix(1, {1, 1}));
  CHECK_FALSE(steering_inputs(stuck, 1, 2).has_value());
}

TEST_CASE("DOT export of the input-state graph", "[graph]") {
  LogicalNetwork net = four_state_net();
  std::string dot = input_state_graph_dot(net);
  CHECK(dot.rfind("digraph", 0) == 0);
  CHECK(dot.find("s6 [label=\"2×(1,2)\"]") != std::string::npos);
  CHECK(dot.find("s4 [label=\"1×(2,2)\"]") != std::string::npos);
  // Every node has M outgoing edges.
  std::size_t edges = 0;
  for (std::size_t pos = 0; (pos = dot.find(" -> ", pos)) != std::string::npos; ++pos) ++edges;
  CHECK(edges == 16);
  // (2×(1,2)) -> (2×(2,2)) appears in the layered figure.
  CHECK(dot.find("s6 -> s8;") != std::string::npos);
  CHECK(dot.find("s6 -> s4;") != std::string::npos);
}
