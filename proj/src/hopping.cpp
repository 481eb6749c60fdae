// SPDX-License-Identifier: Apache-2.0

#include "leobh/hopping.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace leobh {

namespace {

int floor_mod(long long a, long long m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long long floor_div(long long a, long long m) {
  return (a >= 0) ? a / m : -((-a + m - 1) / m);
}

}  // namespace

BlockDims block_dims(int n_hops) {
  if (n_hops < 1) throw std::invalid_argument("block_dims: N_h must be >= 1");
  BlockDims d;
  d.n_cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(n_hops))));
  d.n_rows = (n_hops + d.n_cols - 1) / d.n_cols;
  return d;
}

int hop_index(int row, int col, int n_hops) {
  const BlockDims d = block_dims(n_hops);
  const long long p = static_cast<long long>(d.n_cols) * d.n_rows;
  const long long blocks = std::lcm<long long>(n_hops, p) / p;
  const long long super_rows = blocks * d.n_rows;
  // Sub-lattice decomposition: even and odd hex rows form two rectangular
  // lattices. i steps along longitude (hex column), j along latitude (hex row
  // pairs). The odd sub-lattice is phase-shifted by half a block so that
  // vertically adjacent hex neighbours never share a hop index.
  long long i = col;
  long long j = floor_div(row - floor_mod(row, 2), 2);
  if (floor_mod(row, 2) == 1) {
    i += d.n_rows / 2;
    j += d.n_cols / 2;
  }
  const long long cell =
      static_cast<long long>(floor_mod(i, super_rows)) * d.n_cols + floor_mod(j, d.n_cols);
  return floor_mod(cell, n_hops);
}

HopPlan assign_hop_indices(const std::vector<Beam>& beams, int n_hops) {
  const BlockDims d = block_dims(n_hops);
  const long long p = static_cast<long long>(d.n_cols) * d.n_rows;
  HopPlan plan;
  plan.n_hops = n_hops;
  plan.n_cols = d.n_cols;
  plan.n_rows = d.n_rows;
  plan.blocks_per_super_block = static_cast<int>(std::lcm<long long>(n_hops, p) / p);
  plan.index_of.resize(beams.size());
  plan.active.assign(n_hops, {});
  for (std::size_t k = 0; k < beams.size(); ++k) {
    const int ih = hop_index(beams[k].row, beams[k].col, n_hops);
    plan.index_of[k] = ih;
    plan.active[ih].push_back(beams[k].id);
  }
  return plan;
}

const std::vector<int>& active_set(const HopPlan& plan, int ih) {
  if (ih < 0 || ih >= plan.n_hops)
    throw std::out_of_range("active_set: hop index out of range");
  return plan.active[ih];
}

}  // namespace leobh
