#pragma once

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "brute.hpp"

namespace planted {

struct Instance {
  brute::Graph graph;
  std::vector<int> path;  // x_0..x_{2t}
  std::size_t k = 0;      // planted index
  std::size_t l = 0;      // (iv) only: 0 or t
};

// A t-path on a random vertex order, outside codegree neighbourhoods planted
// so that the named bound is violated at index k, plus noise edges with
// probability `noise`. (ii): dp(0,2k+1), dp(2t,2k+1) >= 1 with sum >= 3.
// (iv): dp(2k,2k+2), dp(2l,2k+1) >= 1 with sum >= 3, l in {0, t}.
Instance bound_ii(std::size_t t, int extra, double noise, std::mt19937_64& rng);
Instance bound_iv(std::size_t t, int extra, double noise, std::mt19937_64& rng);

// A t-path with dp(0, 2k+2) >= 3 planted at a random k, on top of a sparse
// random graph: the raw material for rotations.
Instance rotation(std::size_t t, int extra, double noise, std::mt19937_64& rng);

}  // namespace planted
