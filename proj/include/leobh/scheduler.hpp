// SPDX-License-Identifier: Apache-2.0
//
// FR2 NR frame model for beam-hopped common signaling: SSB burst placement,
// rectangle packing of broadcast/RA messages around the SSB footprint under
// the half-slot, full-slot and extra-sweep schemes, KPI arithmetic, random
// access timing validation and beam-to-cell grouping.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "leobh/hopping.hpp"

namespace leobh {

struct FrameConfig {
  int scs_khz = 120;
  int symbols_per_slot = 14;
  double slot_ms = 0.125;
  int slots_per_half_frame = 40;
  int total_prbs = 132;
  int ssb_period_ms = 20;  // 20 or 160
  int max_ssb_per_half_frame = 64;
  int ssb_prbs = 20;      // SSB footprint, top of the band
  int ssb_symbols = 4;
  int coreset0_prbs = 48;  // below the SSB, first two SSB symbols (pattern 3)
  int coreset0_symbols = 2;

  int slots_per_period() const {
    return static_cast<int>(ssb_period_ms / slot_ms + 0.5);
  }
};

enum class Signal { SSB, CORESET0, SS1, SIB1, SIB19, Paging, MSG2, MSG4 };
std::string to_string(Signal s);

struct Shape {
  int prbs = 0;
  int symbols = 0;
  int ue = 1;          // users addressed by this shape
  int payload_bits = 0;
};

struct SignalSpec {
  Signal signal;
  std::vector<Shape> shapes;  // tried in order
};

struct Catalog {
  SignalSpec sib1;
  SignalSpec sib19;
  SignalSpec paging32;  // full-slot paging message
  SignalSpec paging15;  // half-slot paging message
  SignalSpec msg2;
  SignalSpec msg4;
};

// Canonical resource catalog at MCS 6 (QPSK, rate 449/1024).
Catalog canonical_catalog();

// REs needed for a payload at MCS 6: ceil(bits / (2 * 449/1024)).
long long required_res(long long payload_bits);

struct SsbPosition {
  int ssb_index = 0;
  int slot = 0;  // within the half frame
  int start_symbol = 0;
};

// SSBI mod 4 -> start symbol 4, 8, 2, 6; two SSB per slot (64 beams) or one
// (32 beams), over the 32 SSB-bearing slots of the half frame.
std::vector<SsbPosition> ssb_burst_layout(const FrameConfig& fc, int ssb_per_slot);

enum class Scheme { HalfSlot, FullSlot, ExtraSweep, ExtraSweep160 };
std::string to_string(Scheme s);

struct SchedOptions {
  // ExtraSweep160 standard-change variant: MSG4 co-scheduled in the single
  // sweep instead of a dedicated later sweep.
  bool msg4_coscheduled = false;
};

struct Allocation {
  int slot = 0;
  int start_symbol = 0, n_symbols = 0;
  int start_prb = 0, n_prbs = 0;
  Signal signal = Signal::SSB;
  int hop = 0;
  int ssb_index = 0;
  int ue = 0;
};

struct ScheduleKpis {
  double coverage_ratio = 0.0;
  double cs_efficiency = 0.0;  // 1 - cs_slots/total (matches the printed numbers)
  double cs_slot_ratio = 0.0;  // raw cs_slots/total
  double msg4_per_s = 0.0;     // worst beam, averaged over 160 ms
  double paging_ue_per_s = 0.0;
};

struct ScheduleResult {
  Scheme scheme = Scheme::HalfSlot;
  int n_hops = 0;
  std::vector<Allocation> allocations;  // one SSB period (the SIB1 period)
  int cs_slots = 0;
  int total_slots = 0;
  ScheduleKpis kpis;
  // Per hop, slots of the canonical period carrying MSG2/MSG4 for RA checks.
  std::vector<std::vector<int>> msg2_slots;
  std::vector<std::vector<int>> msg4_slots;
  std::vector<bool> hop_complete;  // all required signals fit in the period
};

ScheduleResult build_schedule(Scheme scheme, int n_hops, const FrameConfig& fc,
                              const Catalog& catalog, const SchedOptions& opts = {});

struct RaViolation {
  int hop = 0;
  double msg2_to_msg4_ms = 0.0;
  std::string detail;
};

// MSG2 -> MSG4 delay must stay within 64 ms (grant within 32 slots is
// satisfied by construction: the grant rides in the MSG2 window).
std::vector<RaViolation> validate_ra_timing(const ScheduleResult& result,
                                            const FrameConfig& fc);

struct Cell {
  int id = 0;
  std::vector<int> beam_ids;
  std::string type;  // "A", "B" or "single"
};

struct CellMap {
  int max_beams_per_cell = 32;
  std::vector<Cell> cells;
};

// Cells group beams of one rectangular block with consecutive (cyclic) hop
// indexes; 32-beam cells split each block in two (types A and B).
CellMap beam_to_cell(const HopPlan& plan, const std::vector<Beam>& beams,
                     int max_beams_per_cell);

}  // namespace leobh
