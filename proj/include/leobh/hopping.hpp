// SPDX-License-Identifier: Apache-2.0
//
// Rectangular-block hop-index assignment over the hexagonal beam grid. The
// hex grid is split into its two shifted rectangular sub-lattices (even and
// odd rows); each is tiled with nCols x nRows blocks filled with consecutive
// hop indexes, stacking blocks vertically until the cyclic filling realigns.

#pragma once

#include <map>
#include <vector>

#include "leobh/layout.hpp"

namespace leobh {

struct BlockDims {
  int n_cols = 0;
  int n_rows = 0;
};

// nCols = ceil(sqrt(N_h)), nRows = ceil(N_h / nCols).
BlockDims block_dims(int n_hops);

struct HopPlan {
  int n_hops = 0;
  int n_cols = 0;
  int n_rows = 0;
  int blocks_per_super_block = 0;     // vertical block count until realignment
  std::vector<int> index_of;          // beam_id -> hop index
  std::vector<std::vector<int>> active;  // hop index -> beam ids, ascending
};

// Hop index of the hex node at axial (row, col). Pure function.
int hop_index(int row, int col, int n_hops);

HopPlan assign_hop_indices(const std::vector<Beam>& beams, int n_hops);

const std::vector<int>& active_set(const HopPlan& plan, int ih);

}  // namespace leobh
