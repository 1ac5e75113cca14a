#pragma once

// Reference systems and random generators shared by the test executables.

#include <cstddef>
#include <random>
#include <vector>

#include "stpsw/logical_network.hpp"
#include "stpsw/matrix.hpp"
#include "stpsw/switched_system.hpp"

namespace stpsw::testing {

inline SwitchedLinearSystem two_mode_sls() {
  Mode m1{Matrix::from_rows({{1, 2, -1}, {0, 1, 0}, {1, -4, 3}}), Matrix::from_rows({{1}, {0}, {0}}),
          Matrix::from_rows({{0, 0, 1}})};
  Mode m2{Matrix::from_rows({{-2, 2, 1}, {0, -2, 0}, {1, -4, 0}}), Matrix::from_rows({{0}, {1}, {0}}),
          Matrix::from_rows({{0, 1, 0}})};
  return SwitchedLinearSystem({m1, m2});
}

inline LogicalNetwork two_mode_net() {
  return LogicalNetwork(4, 2, LogicalMatrix(4, {1, 1, 2, 4, 4, 4, 3, 3}), LogicalMatrix(2, {2, 2, 1, 1, 1, 2, 2, 1}),
                        NodeLayout{2, 2, 1});
}

/// Same transition matrix, single signal value.
inline LogicalNetwork four_state_net() {
  return LogicalNetwork(4, 2, LogicalMatrix(4, {1, 1, 2, 4, 4, 4, 3, 3}), LogicalMatrix(1, std::vector<std::size_t>(8, 1)),
                        NodeLayout{2, 2, 1});
}

inline std::size_t uniform(std::mt19937& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

/// Integer matrix with entries in [-range, range], each zero with probability `zero_prob`.
inline Matrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, long range = 2,
                            double zero_prob = 0.4) {
  Matrix out(rows, cols);
  std::bernoulli_distribution zero(zero_prob);
  std::uniform_int_distribution<long> value(-range, range);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) out.set(r, c, zero(rng) ? Scalar(0) : Scalar(value(rng)));
  return out;
}

/// Random upper-triangular matrix with unit-modulus diagonal times a random lower-triangular one:
/// always invertible.
inline Matrix random_invertible(std::mt19937& rng, std::size_t n) {
  Matrix u = random_matrix(rng, n, n, 2, 0.5);
  Matrix l = random_matrix(rng, n, n, 2, 0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (j < i) u.set(i, j, Scalar(0));
      if (j > i) l.set(i, j, Scalar(0));
    }
  for (std::size_t i = 0; i < n; ++i) {
    u.set(i, i, Scalar(uniform(rng, 0, 1) ? 1 : -1));
    l.set(i, i, Scalar(1));
  }
  return u * l;
}

struct RandomShape {
  std::size_t n, m, p, q, states, inputs;
};

inline RandomShape random_shape(std::mt19937& rng, std::size_t max_n = 3, std::size_t max_q = 3,
                                std::size_t max_states = 4, std::size_t max_inputs = 2) {
  return {uniform(rng, 1, max_n), uniform(rng, 1, 2), uniform(rng, 1, 2), uniform(rng, 1, max_q),
          uniform(rng, 1, max_states), uniform(rng, 1, max_inputs)};
}

inline SwitchedLinearSystem random_sls(std::mt19937& rng, const RandomShape& s, bool invertible = false) {
  std::vector<Mode> modes;
  for (std::size_t i = 0; i < s.q; ++i)
    modes.push_back(Mode{invertible ? random_invertible(rng, s.n) : random_matrix(rng, s.n, s.n),
                         random_matrix(rng, s.n, s.m, 2, 0.6), random_matrix(rng, s.p, s.n, 2, 0.6)});
  return SwitchedLinearSystem(std::move(modes));
}

inline LogicalNetwork random_net(std::mt19937& rng, std::size_t states, std::size_t inputs, std::size_t signals) {
  std::vector<std::size_t> l(states * inputs), r(states * inputs);
  for (auto& v : l) v = uniform(rng, 1, states);
  for (auto& v : r) v = uniform(rng, 1, signals);
  return LogicalNetwork(states, inputs, LogicalMatrix(states, l), LogicalMatrix(signals, r));
}

/// Every tuple in [1,m]^t in lexicographic order.
inline std::vector<std::vector<std::size_t>> all_tuples(std::size_t m, std::size_t t) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur(t, 1);
  while (true) {
    out.push_back(cur);
    std::size_t i = t;
    while (i > 0 && cur[i - 1] == m) cur[--i] = 1;
    if (i == 0) return out;
    ++cur[i - 1];
  }
}

}  // namespace stpsw::testing
