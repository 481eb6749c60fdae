// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "leobh/hopping.hpp"

using namespace leobh;

namespace {

// Synthetic beam list over a rectangular patch of hex axial coordinates.
std::vector<Beam> patch(int rows, int cols) {
  std::vector<Beam> beams;
  int id = 0;
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      Beam b;
      b.id = id++;
      b.row = r;
      b.col = c;
      beams.push_back(b);
    }
  return beams;
}

}  // namespace

TEST_CASE("block dimensions") {
  CHECK(block_dims(64).n_cols == 8);
  CHECK(block_dims(64).n_rows == 8);
  CHECK(block_dims(56).n_cols == 8);
  CHECK(block_dims(56).n_rows == 7);
  CHECK(block_dims(1).n_cols == 1);
  CHECK(block_dims(1).n_rows == 1);
  CHECK(block_dims(61).n_cols == 8);
  CHECK(block_dims(61).n_rows == 8);
  CHECK(block_dims(107).n_cols == 11);
  CHECK(block_dims(107).n_rows == 10);
  CHECK_THROWS_AS(block_dims(0), std::invalid_argument);
}

TEST_CASE("regular-case formula") {
  // even hex row 10 sits on the even sub-lattice at lattice row 5;
  // (i=3, j=5) with 8x8 blocks gives 3*8+5 = 29
  CHECK(hop_index(10, 3, 64) == 29);
  // every index of a 64-block appears exactly once per aligned block
  std::set<int> seen;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) seen.insert(hop_index(2 * j, i, 64));
  CHECK(seen.size() == 64);
  // N_h = 1 sends everything to hop 0
  for (int r = -5; r <= 5; ++r)
    for (int c = -5; c <= 5; ++c) CHECK(hop_index(r, c, 1) == 0);
}

TEST_CASE("irregular 61-hop super block") {
  // Consecutive cyclic filling: on the even sub-lattice, cell (i, j) of the
  // super block carries index (i*8 + j) mod 61.
  // First block: 0..60 then 0, 1, 2 reused.
  std::vector<int> first;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) first.push_back(hop_index(2 * j, i, 61));
  for (int t = 0; t < 61; ++t) CHECK(first[t] == t);
  CHECK(first[61] == 0);
  CHECK(first[62] == 1);
  CHECK(first[63] == 2);
  // second block starts with the next index, 3
  CHECK(hop_index(0, 8, 61) == 3);
  // the cyclic filling realigns after lcm(61, 64)/64 = 61 stacked blocks;
  // the final cell of the super block carries index 60
  const HopPlan plan = assign_hop_indices(patch(1, 1), 61);
  CHECK(plan.blocks_per_super_block == 61);
  CHECK(hop_index(2 * 7, 61 * 8 - 1, 61) == 60);
  // the first 8 stacked blocks continue the consecutive filling
  for (int blk = 0; blk < 8; ++blk)
    CHECK(hop_index(0, blk * 8, 61) == (blk * 64) % 61);
}

TEST_CASE("partition property") {
  for (int nh : {1, 7, 56, 61, 62, 64, 107}) {
    const auto beams = patch(60, 60);
    const HopPlan plan = assign_hop_indices(beams, nh);
    CHECK(plan.n_hops == nh);
    // every beam in exactly one active set
    std::size_t total = 0;
    std::vector<int> owner(beams.size(), -1);
    for (int ih = 0; ih < nh; ++ih) {
      for (int id : active_set(plan, ih)) {
        CHECK(owner[id] == -1);
        owner[id] = ih;
      }
      total += plan.active[ih].size();
    }
    CHECK(total == beams.size());
    for (std::size_t k = 0; k < beams.size(); ++k) {
      CHECK(owner[k] == plan.index_of[k]);
      CHECK(plan.index_of[k] >= 0);
      CHECK(plan.index_of[k] < nh);
    }
    // within any aligned block of one sub-lattice, no index repeats more than
    // ceil(nCols*nRows / N_h) times
    const BlockDims d = block_dims(nh);
    const int cap = (d.n_cols * d.n_rows + nh - 1) / nh;
    for (int sub = 0; sub < 2; ++sub) {
      for (int bi = 0; bi + d.n_rows <= 30; bi += d.n_rows) {
        for (int bj = 0; bj + d.n_cols <= 30; bj += d.n_cols) {
          std::map<int, int> count;
          for (int i = bi; i < bi + d.n_rows; ++i)
            for (int j = bj; j < bj + d.n_cols; ++j)
              count[hop_index(2 * j + sub, i, nh)]++;
          for (const auto& [ih, n] : count) CHECK(n <= cap);
        }
      }
    }
  }
}

TEST_CASE("sub-lattice offset separates hex neighbours") {
  // vertically adjacent hex rows never share a hop index for workable N_h
  for (int nh : {56, 61, 62, 64, 107}) {
    for (int r = 0; r < 20; ++r)
      for (int c = 0; c < 20; ++c)
        CHECK(hop_index(r, c, nh) != hop_index(r + 1, c, nh));
  }
}

TEST_CASE("active set bounds") {
  const HopPlan plan = assign_hop_indices(patch(10, 10), 7);
  CHECK_THROWS_AS(active_set(plan, -1), std::out_of_range);
  CHECK_THROWS_AS(active_set(plan, 7), std::out_of_range);
  // ids ascending within each set
  for (int ih = 0; ih < 7; ++ih) {
    const auto& s = active_set(plan, ih);
    for (std::size_t t = 1; t < s.size(); ++t) CHECK(s[t - 1] < s[t]);
  }
}
