// SPDX-License-Identifier: Apache-2.0

#include "leobh/scheduler.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace leobh {

std::string to_string(Signal s) {
  switch (s) {
    case Signal::SSB: return "SSB";
    case Signal::CORESET0: return "CORESET0";
    case Signal::SS1: return "SS1";
    case Signal::SIB1: return "SIB1";
    case Signal::SIB19: return "SIB19";
    case Signal::Paging: return "PAGING";
    case Signal::MSG2: return "MSG2";
    case Signal::MSG4: return "MSG4";
  }
  return "?";
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::HalfSlot: return "half_slot";
    case Scheme::FullSlot: return "full_slot";
    case Scheme::ExtraSweep: return "extra_sweep";
    case Scheme::ExtraSweep160: return "extra_sweep_160";
  }
  return "?";
}

long long required_res(long long payload_bits) {
  if (payload_bits <= 0) return 0;
  // 2 bits/RE (QPSK) at code rate 449/1024.
  return (payload_bits * 1024 + 897) / 898;
}

Catalog canonical_catalog() {
  Catalog c;
  c.sib1 = {Signal::SIB1, {{70, 2, 1, 1280}}};
  c.sib19 = {Signal::SIB19, {{34, 2, 1, 616}, {16, 4, 1, 616}}};
  c.paging32 = {Signal::Paging, {{70, 2, 32, 1280}, {33, 4, 32, 1280}, {22, 6, 32, 1280}}};
  c.paging15 = {Signal::Paging, {{34, 2, 15, 600}, {16, 4, 15, 600}}};
  c.msg2 = {Signal::MSG2, {{27, 2, 7, 490}, {15, 4, 8, 560}, {11, 6, 9, 630}}};
  c.msg4 = {Signal::MSG4, {{57, 2, 1, 1040}, {27, 4, 1, 1040}, {18, 6, 1, 1040}, {8, 13, 1, 1040}}};
  return c;
}

namespace {

constexpr int kStartSym[4] = {4, 8, 2, 6};

std::vector<int> ssb_bearing_slots(const FrameConfig& fc) {
  std::vector<int> out;
  for (int s = 0; s < fc.slots_per_half_frame && static_cast<int>(out.size()) < 32; ++s)
    if (s % 5 != 4) out.push_back(s);
  return out;
}

}  // namespace

std::vector<SsbPosition> ssb_burst_layout(const FrameConfig& fc, int ssb_per_slot) {
  if (ssb_per_slot != 1 && ssb_per_slot != 2)
    throw std::invalid_argument("ssb_burst_layout: ssb_per_slot must be 1 or 2");
  const auto slots = ssb_bearing_slots(fc);
  std::vector<SsbPosition> out;
  const int n = ssb_per_slot == 2 ? fc.max_ssb_per_half_frame : 32;
  for (int ssbi = 0; ssbi < n; ++ssbi)
    out.push_back({ssbi, slots[ssbi / ssb_per_slot], kStartSym[ssbi % 4]});
  return out;
}

namespace {

struct Grid {
  int syms, prbs;
  std::vector<char> occ;
  Grid(int s, int p) : syms(s), prbs(p), occ(static_cast<std::size_t>(s) * p, 0) {}
  char& at(int s, int p) { return occ[static_cast<std::size_t>(s) * prbs + p]; }
  bool free_rect(int s0, int ns, int p0, int np) {
    if (s0 < 0 || p0 < 0 || s0 + ns > syms || p0 + np > prbs) return false;
    for (int s = s0; s < s0 + ns; ++s)
      for (int p = p0; p < p0 + np; ++p)
        if (at(s, p)) return false;
    return true;
  }
  void fill(int s0, int ns, int p0, int np) {
    for (int s = s0; s < s0 + ns; ++s)
      for (int p = p0; p < p0 + np; ++p) at(s, p) = 1;
  }
  // First fit scanning symbols then PRBs, restricted to [sym_lo, sym_hi).
  std::optional<std::pair<int, int>> find(int ns, int np, int sym_lo, int sym_hi) {
    for (int s = sym_lo; s + ns <= sym_hi; ++s)
      for (int p = 0; p + np <= prbs; ++p)
        if (free_rect(s, ns, p, np)) return std::make_pair(s, p);
    return std::nullopt;
  }
};

enum class SibKind { Sib1, Sib19, Plain, Both };

struct PeriodCounts {
  int msg4 = 0;
  int paging_ue = 0;
  bool complete = true;
  std::vector<int> msg2_slots, msg4_slots;
};

struct Period {
  std::vector<Allocation> allocs;
  std::vector<PeriodCounts> hop;
  int cs_slots = 0;
};

struct Builder {
  const FrameConfig& fc;
  const Catalog& cat;
  int period_slots;
  std::map<int, Grid> grids;
  Period out;

  Builder(const FrameConfig& f, const Catalog& c, int n_hops)
      : fc(f), cat(c), period_slots(f.slots_per_period()) {
    out.hop.resize(n_hops);
  }

  Grid& grid(int slot) {
    auto it = grids.find(slot);
    if (it == grids.end())
      it = grids.emplace(slot, Grid(fc.symbols_per_slot, fc.total_prbs)).first;
    return it->second;
  }

  bool slot_ok(int slot, int hop) {
    if (slot < period_slots) return true;
    out.hop[hop].complete = false;
    return false;
  }

  void record(int slot, int s0, int ns, int p0, int np, Signal sig, int hop, int ssbi,
              int ue) {
    out.allocs.push_back({slot, s0, ns, p0, np, sig, hop, ssbi, ue});
  }

  void place_ssb(int slot, int start, int hop, int ssbi) {
    if (!slot_ok(slot, hop)) return;
    Grid& g = grid(slot);
    const int ssb_p0 = fc.total_prbs - fc.ssb_prbs;
    g.fill(start, fc.ssb_symbols, ssb_p0, fc.ssb_prbs);
    record(slot, start, fc.ssb_symbols, ssb_p0, fc.ssb_prbs, Signal::SSB, hop, ssbi, 0);
    const int cs_p0 = ssb_p0 - fc.coreset0_prbs;
    g.fill(start, fc.coreset0_symbols, cs_p0, fc.coreset0_prbs);
    record(slot, start, fc.coreset0_symbols, cs_p0, fc.coreset0_prbs, Signal::CORESET0,
           hop, ssbi, 0);
  }

  // Places up to `quota` copies; returns how many fit.
  int place(const SignalSpec& spec, int slot, int sym_lo, int sym_hi, int hop, int ssbi,
            int quota = 1) {
    if (!slot_ok(slot, hop)) return 0;
    Grid& g = grid(slot);
    int placed = 0;
    while (placed < quota) {
      bool ok = false;
      for (const Shape& sh : spec.shapes) {
        if (auto pos = g.find(sh.symbols, sh.prbs, sym_lo, sym_hi)) {
          g.fill(pos->first, sh.symbols, pos->second, sh.prbs);
          record(slot, pos->first, sh.symbols, pos->second, sh.prbs, spec.signal, hop,
                 ssbi, sh.ue);
          if (spec.signal == Signal::MSG4) {
            out.hop[hop].msg4++;
            out.hop[hop].msg4_slots.push_back(slot);
          } else if (spec.signal == Signal::Paging) {
            out.hop[hop].paging_ue += sh.ue;
          } else if (spec.signal == Signal::MSG2) {
            out.hop[hop].msg2_slots.push_back(slot);
          }
          ok = true;
          break;
        }
      }
      if (!ok) break;
      ++placed;
    }
    return placed;
  }

  void place_ss1(int slot, int sym_lo, int sym_hi, int hop, int ssbi) {
    static const SignalSpec ss1{Signal::SS1, {{132, 1, 0, 0}}};
    SignalSpec s = ss1;
    s.shapes[0].prbs = fc.total_prbs;
    place(s, slot, sym_lo, sym_hi, hop, ssbi);
  }

  void place_sib(SibKind kind, int slot, int sym_lo, int sym_hi, int hop, int ssbi) {
    if (kind == SibKind::Sib1 || kind == SibKind::Both)
      place(cat.sib1, slot, sym_lo, sym_hi, hop, ssbi);
    if (kind == SibKind::Sib19 || kind == SibKind::Both)
      place(cat.sib19, slot, sym_lo, sym_hi, hop, ssbi);
  }

  Period finish() {
    std::set<int> slots;
    for (const auto& a : out.allocs) slots.insert(a.slot);
    out.cs_slots = static_cast<int>(slots.size());
    return std::move(out);
  }
};

// Half-slot hop window inside an SSB slot: [0, start of second SSB) for the
// even SSBI, the rest of the slot for the odd one.
struct HalfWindow {
  int slot = 0, ssbi = 0, start = 0, sym_lo = 0, sym_hi = 0;
  bool first = true;
};

HalfWindow half_window(const FrameConfig& fc, int ih) {
  const auto slots = ssb_bearing_slots(fc);
  HalfWindow w;
  const int hf = ih / fc.max_ssb_per_half_frame;
  const int within = ih % fc.max_ssb_per_half_frame;
  w.slot = hf * fc.slots_per_half_frame + slots[within / 2];
  w.ssbi = within;
  w.start = kStartSym[within % 4];
  w.first = within % 2 == 0;
  const int second_start = kStartSym[(within | 1) % 4];
  w.sym_lo = w.first ? 0 : second_start;
  w.sym_hi = w.first ? second_start : fc.symbols_per_slot;
  return w;
}

int full_slot_of(const FrameConfig& fc, int ih) {
  const auto slots = ssb_bearing_slots(fc);
  return (ih / 32) * fc.slots_per_half_frame + slots[ih % 32];
}

void place_half_window(Builder& b, const HalfWindow& w, SibKind kind, int ih,
                       bool with_cs);

Period build_period(Scheme scheme, int n_hops, const FrameConfig& fc,
                    const Catalog& cat, SibKind kind, const SchedOptions& opts) {
  Builder b(fc, cat, n_hops);
  switch (scheme) {
    case Scheme::HalfSlot:
      for (int ih = 0; ih < n_hops; ++ih) {
        const HalfWindow w = half_window(fc, ih);
        place_half_window(b, w, kind, ih, /*with_cs=*/true);
      }
      break;
    case Scheme::FullSlot:
      for (int ih = 0; ih < n_hops; ++ih) {
        const int slot = full_slot_of(fc, ih);
        const int ssbi = ih % 32;
        b.place_ssb(slot, kStartSym[ssbi % 4], ih, ssbi);
        if (ssbi % 2 == 0) b.place_ss1(slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place_sib(kind, slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place(cat.paging32, slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place(cat.msg4, slot, 0, fc.symbols_per_slot, ih, ssbi, 9);
        b.place(cat.msg2, slot, 0, fc.symbols_per_slot, ih, ssbi);
      }
      break;
    case Scheme::ExtraSweep: {
      for (int ih = 0; ih < n_hops; ++ih) {
        const HalfWindow w = half_window(fc, ih);
        place_half_window(b, w, kind, ih, /*with_cs=*/false);
      }
      const int sweep_start =
          fc.slots_per_half_frame * ((n_hops + fc.max_ssb_per_half_frame - 1) /
                                     fc.max_ssb_per_half_frame);
      for (int ih = 0; ih < n_hops; ++ih) {
        const int slot = sweep_start + ih;
        b.place_ss1(slot, 0, fc.symbols_per_slot, ih, ih % 64);
        b.place(cat.msg2, slot, 0, fc.symbols_per_slot, ih, ih % 64);
        b.place(cat.msg4, slot, 0, fc.symbols_per_slot, ih, ih % 64, 9);
      }
      break;
    }
    case Scheme::ExtraSweep160: {
      for (int ih = 0; ih < n_hops; ++ih) {
        const int slot = full_slot_of(fc, ih);
        const int ssbi = ih % 32;
        b.place_ssb(slot, kStartSym[ssbi % 4], ih, ssbi);
        if (opts.msg4_coscheduled) b.place_ss1(slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place_sib(SibKind::Both, slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place(cat.paging32, slot, 0, fc.symbols_per_slot, ih, ssbi);
        b.place(cat.msg2, slot, 0, fc.symbols_per_slot, ih, ssbi);
        if (opts.msg4_coscheduled)
          b.place(cat.msg4, slot, 0, fc.symbols_per_slot, ih, ssbi, 9);
      }
      if (!opts.msg4_coscheduled) {
        const int sweep_start = fc.slots_per_half_frame * ((n_hops + 31) / 32);
        for (int ih = 0; ih < n_hops; ++ih) {
          const int slot = sweep_start + ih;
          b.place_ss1(slot, 0, fc.symbols_per_slot, ih, ih % 32);
          b.place(cat.msg4, slot, 0, fc.symbols_per_slot, ih, ih % 32, 9);
        }
      }
      break;
    }
  }
  return b.finish();
}

void place_half_window(Builder& b, const HalfWindow& w, SibKind kind, int ih,
                       bool with_cs) {
  b.place_ssb(w.slot, w.start, ih, w.ssbi);
  if (with_cs && w.first) b.place_ss1(w.slot, w.sym_lo, w.sym_hi, ih, w.ssbi);
  b.place_sib(kind, w.slot, w.sym_lo, w.sym_hi, ih, w.ssbi);
  if (with_cs) b.place(b.cat.msg4, w.slot, w.sym_lo, w.sym_hi, ih, w.ssbi, 2);
  b.place(b.cat.paging15, w.slot, w.sym_lo, w.sym_hi, ih, w.ssbi);
  if (with_cs) b.place(b.cat.msg2, w.slot, w.sym_lo, w.sym_hi, ih, w.ssbi);
}

}  // namespace

ScheduleResult build_schedule(Scheme scheme, int n_hops, const FrameConfig& fc,
                              const Catalog& catalog, const SchedOptions& opts) {
  if (n_hops < 1) throw std::invalid_argument("build_schedule: N_h must be >= 1");
  const bool wants160 = scheme == Scheme::ExtraSweep160;
  if (wants160 != (fc.ssb_period_ms == 160))
    throw std::invalid_argument("build_schedule: scheme/SSB-period mismatch");

  ScheduleResult res;
  res.scheme = scheme;
  res.n_hops = n_hops;
  res.total_slots = fc.slots_per_period();

  std::vector<long long> msg4_160(n_hops, 0), paging_160(n_hops, 0);
  Period canonical;
  if (wants160) {
    canonical = build_period(scheme, n_hops, fc, catalog, SibKind::Both, opts);
    for (int ih = 0; ih < n_hops; ++ih) {
      msg4_160[ih] = canonical.hop[ih].msg4;
      paging_160[ih] = canonical.hop[ih].paging_ue;
    }
  } else {
    canonical = build_period(scheme, n_hops, fc, catalog, SibKind::Sib1, opts);
    const Period p19 = build_period(scheme, n_hops, fc, catalog, SibKind::Sib19, opts);
    const Period pl = build_period(scheme, n_hops, fc, catalog, SibKind::Plain, opts);
    for (int ih = 0; ih < n_hops; ++ih) {
      msg4_160[ih] = canonical.hop[ih].msg4 + p19.hop[ih].msg4 + 6LL * pl.hop[ih].msg4;
      paging_160[ih] =
          canonical.hop[ih].paging_ue + p19.hop[ih].paging_ue + 6LL * pl.hop[ih].paging_ue;
    }
  }
  res.allocations = canonical.allocs;
  res.cs_slots = canonical.cs_slots;
  res.msg2_slots.resize(n_hops);
  res.msg4_slots.resize(n_hops);
  res.hop_complete.resize(n_hops);
  int complete = 0;
  long long worst_msg4 = -1, worst_paging = -1;
  for (int ih = 0; ih < n_hops; ++ih) {
    res.msg2_slots[ih] = canonical.hop[ih].msg2_slots;
    res.msg4_slots[ih] = canonical.hop[ih].msg4_slots;
    res.hop_complete[ih] = canonical.hop[ih].complete;
    if (canonical.hop[ih].complete) ++complete;
    if (worst_msg4 < 0 || msg4_160[ih] < worst_msg4) worst_msg4 = msg4_160[ih];
    if (worst_paging < 0 || paging_160[ih] < worst_paging) worst_paging = paging_160[ih];
  }
  res.kpis.coverage_ratio = std::min(1.0, static_cast<double>(complete) / n_hops);
  res.kpis.cs_slot_ratio = static_cast<double>(res.cs_slots) / res.total_slots;
  res.kpis.cs_efficiency = 1.0 - res.kpis.cs_slot_ratio;
  res.kpis.msg4_per_s = static_cast<double>(worst_msg4) / 0.16;
  res.kpis.paging_ue_per_s = static_cast<double>(worst_paging) / 0.16;
  return res;
}

std::vector<RaViolation> validate_ra_timing(const ScheduleResult& result,
                                            const FrameConfig& fc) {
  std::vector<RaViolation> out;
  const int period = fc.slots_per_period();
  const double limit_ms = 64.0;
  for (int ih = 0; ih < result.n_hops; ++ih) {
    if (result.msg2_slots[ih].empty() || result.msg4_slots[ih].empty()) continue;
    for (int s2 : result.msg2_slots[ih]) {
      // Earliest MSG4 at least 2 slots after MSG2 (MSG3 turnaround), wrapping
      // to the next period when none remains in this one.
      int best = -1;
      for (int s4 : result.msg4_slots[ih])
        if (s4 >= s2 + 2 && (best < 0 || s4 < best)) best = s4;
      if (best < 0) best = *std::min_element(result.msg4_slots[ih].begin(),
                                             result.msg4_slots[ih].end()) +
                           period;
      const double delay_ms = (best - s2) * fc.slot_ms;
      if (delay_ms > limit_ms)
        out.push_back({ih, delay_ms,
                       "MSG2 at slot " + std::to_string(s2) + ", next MSG4 after " +
                           std::to_string(delay_ms) + " ms"});
    }
  }
  return out;
}

namespace {

int cell_floor_mod(long long a, long long m) {
  const long long r = a % m;
  return static_cast<int>(r < 0 ? r + m : r);
}

long long cell_floor_div(long long a, long long m) {
  return (a >= 0) ? a / m : -((-a + m - 1) / m);
}

}  // namespace

CellMap beam_to_cell(const HopPlan& plan, const std::vector<Beam>& beams,
                     int max_beams_per_cell) {
  if (max_beams_per_cell != 32 && max_beams_per_cell != 64)
    throw std::invalid_argument("beam_to_cell: max beams per cell must be 32 or 64");
  CellMap map;
  map.max_beams_per_cell = max_beams_per_cell;
  const int nr = plan.n_rows, nc = plan.n_cols;
  const bool single = nr * nc <= max_beams_per_cell;
  std::map<std::tuple<int, long long, long long, int>, std::vector<int>> groups;
  for (const auto& b : beams) {
    const int sub = cell_floor_mod(b.row, 2);
    long long i = b.col, j = cell_floor_div(b.row - cell_floor_mod(b.row, 2), 2);
    if (sub == 1) {
      i += nr / 2;
      j += nc / 2;
    }
    // Row-major position inside the block: consecutive positions carry
    // consecutive (cyclic) hop indexes.
    const int t = cell_floor_mod(i, nr) * nc + cell_floor_mod(j, nc);
    const int range = single ? 0 : t / max_beams_per_cell;
    groups[{sub, cell_floor_div(i, nr), cell_floor_div(j, nc), range}].push_back(b.id);
  }
  int id = 0;
  for (auto& [key, ids] : groups) {
    Cell c;
    c.id = id++;
    c.beam_ids = std::move(ids);
    c.type = single ? "single" : std::string(1, static_cast<char>('A' + std::get<3>(key)));
    map.cells.push_back(std::move(c));
  }
  return map;
}

}  // namespace leobh
