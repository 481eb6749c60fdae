// SPDX-License-Identifier: Apache-2.0
//
// Experiment runner: layout construction, the minimum-hop-count sweep and
// common-signaling schedule generation, with machine-readable outputs.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <set>

#include <CLI11.hpp>
#include <json.hpp>

#include "leobh/export.hpp"
#include "leobh/threading.hpp"

namespace {

using namespace leobh;
using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

struct Common {
  std::string config_path;
  std::string out_dir = ".";
  int threads = 0;
  bool strict = false;
};

ExperimentConfig load(const Common& c) {
  ExperimentConfig cfg = c.config_path.empty() ? ExperimentConfig{} : load_config(c.config_path);
  if (!c.out_dir.empty()) cfg.output_dir = c.out_dir;
  if (c.threads > 0) cfg.threads = c.threads;
  cfg.validate();
  return cfg;
}

std::string config_hash(const ExperimentConfig& cfg) {
  char buf[20];
  std::snprintf(buf, sizeof(buf), "%016zx", std::hash<std::string>{}(dump_config(cfg)));
  return buf;
}

void write_manifest(const ExperimentConfig& cfg, const std::string& command,
                    double runtime_s) {
  json m = {{"command", command},
            {"version", kVersion},
            {"config_hash", config_hash(cfg)},
            {"config", json::parse(dump_config(cfg))},
            {"runtime_s", runtime_s}};
  write_file(cfg.output_dir + "/manifest.json", m.dump(2) + "\n");
}

Scheme scheme_from_string(const std::string& s) {
  if (s == "half_slot") return Scheme::HalfSlot;
  if (s == "full_slot") return Scheme::FullSlot;
  if (s == "extra_sweep") return Scheme::ExtraSweep;
  if (s == "extra_sweep_160") return Scheme::ExtraSweep160;
  throw ConfigError("unknown scheme: " + s);
}

int run_layout(const Common& common, const std::string& design) {
  const ExperimentConfig cfg = load(common);
  const auto t0 = std::chrono::steady_clock::now();
  const LayoutSpec spec = named_design(design, cfg);
  const BeamLayout layout = build_layout(spec);
  std::filesystem::create_directories(cfg.output_dir);
  write_file(cfg.output_dir + "/layout_" + design + ".csv", layout_csv(layout));
  json j = {{"design", design},
            {"d_g_km", layout.d_g_km},
            {"K", layout.n_beams()},
            {"reference_radius_km", layout.reference_radius_km}};
  write_file(cfg.output_dir + "/layout_" + design + ".json", j.dump(2) + "\n");
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, "layout " + design, dt);
  std::cout << "design " << design << ": K=" << layout.n_beams()
            << " d_g=" << layout.d_g_km << " km\n";
  return 0;
}

int run_sweep(const Common& common, std::vector<std::string> designs) {
  const ExperimentConfig cfg = load(common);
  if (designs.empty()) designs = design_names();
  const auto t0 = std::chrono::steady_clock::now();
  const ArrayGeometry arr = cfg.build_reference_array();
  const int threads = resolve_threads(cfg.threads);
  std::filesystem::create_directories(cfg.output_dir);
  json table = json::array();
  bool any_unachievable = false;
  for (const auto& name : designs) {
    const LayoutSpec spec = named_design(name, cfg);
    const BeamLayout layout = build_layout(spec);
    const SensingGrid grid = build_sensing_grid(layout, cfg.sensing_spacing_km);
    const PowerScheme scheme = default_scheme(spec);
    const MinHopsResult r =
        min_hops(layout, scheme, grid, arr, cfg.link, cfg.search, threads);
    json row = {{"design", name},
                {"K", layout.n_beams()},
                {"scheme", scheme == PowerScheme::Equal ? "equal" : "snr_equalizing"},
                {"achievable", r.achievable},
                {"min_n_hops", r.achievable ? json(r.n_hops) : json()},
                {"p5_db", r.p5_db},
                {"evaluations", r.evaluations}};
    table.push_back(row);
    std::cout << "design " << name << ": "
              << (r.achievable ? "min N_h=" + std::to_string(r.n_hops)
                               : "NotAchievable")
              << " (p5=" << r.p5_db << " dB)\n";
    if (!r.achievable) any_unachievable = true;
    const int n_cdf = r.achievable ? r.n_hops : layout.n_beams();
    const HopPlan plan = assign_hop_indices(layout.beams, n_cdf);
    const SinrMap map = evaluate_sinr(layout, plan, grid, scheme, arr, cfg.link, threads);
    write_file(cfg.output_dir + "/cdf_" + name + ".csv", cdf_csv(map));
    write_file(cfg.output_dir + "/sinr_" + name + ".csv", sinr_map_csv(layout, grid, map));
  }
  write_file(cfg.output_dir + "/min_hops.json", table.dump(2) + "\n");
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, "sweep", dt);
  return (any_unachievable && common.strict) ? 3 : 0;
}

int run_schedule(const Common& common, const std::string& scheme_name, int n_hops,
                 bool msg4_coscheduled) {
  const ExperimentConfig cfg = load(common);
  const auto t0 = std::chrono::steady_clock::now();
  const Scheme scheme = scheme_from_string(scheme_name);
  FrameConfig fc = cfg.frame;
  fc.ssb_period_ms = scheme == Scheme::ExtraSweep160 ? 160 : 20;
  SchedOptions opts;
  opts.msg4_coscheduled = msg4_coscheduled;
  const ScheduleResult r = build_schedule(scheme, n_hops, fc, canonical_catalog(), opts);
  const auto violations = validate_ra_timing(r, fc);
  std::filesystem::create_directories(cfg.output_dir);
  write_file(cfg.output_dir + "/schedule.csv", schedule_csv(r));
  json kpis = {{"scheme", to_string(scheme)},
               {"n_hops", n_hops},
               {"msg4_coscheduled", msg4_coscheduled},
               {"cs_slots", r.cs_slots},
               {"total_slots", r.total_slots},
               {"coverage_ratio", r.kpis.coverage_ratio},
               {"cs_efficiency", r.kpis.cs_efficiency},
               {"cs_slot_ratio", r.kpis.cs_slot_ratio},
               {"msg4_per_s", r.kpis.msg4_per_s},
               {"paging_ue_per_s", r.kpis.paging_ue_per_s},
               {"ra_violations", violations.size()}};
  write_file(cfg.output_dir + "/kpis.json", kpis.dump(2) + "\n");
  // Per-half-frame classification for timing plots.
  json timeline = json::array();
  const int hf_slots = fc.slots_per_half_frame;
  std::vector<int> cs_per_hf((r.total_slots + hf_slots - 1) / hf_slots, 0);
  {
    std::set<int> slots;
    for (const auto& a : r.allocations) slots.insert(a.slot);
    for (int s : slots) cs_per_hf[s / hf_slots]++;
  }
  for (std::size_t hf = 0; hf < cs_per_hf.size(); ++hf) {
    const char* kind = cs_per_hf[hf] == 0          ? "data"
                       : cs_per_hf[hf] == hf_slots ? "cs_only"
                                                   : "shared";
    timeline.push_back({{"half_frame", hf}, {"cs_slots", cs_per_hf[hf]}, {"kind", kind}});
  }
  write_file(cfg.output_dir + "/timeline.json", timeline.dump(2) + "\n");
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, "schedule " + scheme_name, dt);
  std::cout << to_string(scheme) << " N_h=" << n_hops << ": cs_slots=" << r.cs_slots
            << "/" << r.total_slots << " efficiency=" << r.kpis.cs_efficiency * 100.0
            << "% coverage=" << r.kpis.coverage_ratio * 100.0 << "%\n";
  const bool infeasible = r.kpis.coverage_ratio < 1.0;
  return (infeasible && common.strict) ? 3 : 0;
}

int run_report(const Common& common) {
  const ExperimentConfig cfg = load(common);
  const auto t0 = std::chrono::steady_clock::now();
  std::filesystem::create_directories(cfg.output_dir);
  json rep;
  for (const auto& name : design_names()) {
    const BeamLayout layout = build_layout(named_design(name, cfg));
    rep["layouts"].push_back(
        {{"design", name}, {"K", layout.n_beams()}, {"d_g_km", layout.d_g_km}});
  }
  const Catalog cat = canonical_catalog();
  auto add_sched = [&](Scheme s, int nh, bool cosched) {
    FrameConfig fc = cfg.frame;
    fc.ssb_period_ms = s == Scheme::ExtraSweep160 ? 160 : 20;
    SchedOptions opts;
    opts.msg4_coscheduled = cosched;
    const ScheduleResult r = build_schedule(s, nh, fc, cat, opts);
    rep["schedules"].push_back({{"scheme", to_string(s)},
                                {"n_hops", nh},
                                {"msg4_coscheduled", cosched},
                                {"cs_slots", r.cs_slots},
                                {"cs_efficiency", r.kpis.cs_efficiency},
                                {"coverage_ratio", r.kpis.coverage_ratio},
                                {"msg4_per_s", r.kpis.msg4_per_s},
                                {"paging_ue_per_s", r.kpis.paging_ue_per_s}});
  };
  for (int nh : {62, 107}) {
    add_sched(Scheme::HalfSlot, nh, false);
    add_sched(Scheme::FullSlot, nh, false);
    add_sched(Scheme::ExtraSweep, nh, false);
    add_sched(Scheme::ExtraSweep160, nh, false);
  }
  add_sched(Scheme::ExtraSweep160, 62, true);
  write_file(cfg.output_dir + "/report.json", rep.dump(2) + "\n");
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  write_manifest(cfg, "report", dt);
  std::cout << "report written to " << cfg.output_dir << "/report.json\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Earth-fixed multibeam layout, beam-hopping and common-signaling "
               "schedule toolkit"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand name
  Common common;
  app.add_option("--config", common.config_path, "JSON config file");
  app.add_option("--out", common.out_dir, "output directory");
  app.add_option("--threads", common.threads, "worker threads (0: auto)");
  app.add_flag("--strict", common.strict,
               "exit 3 on NotAchievable/incomplete coverage");

  auto* lay = app.add_subcommand("layout", "build a beam layout");
  std::string design = "B";
  lay->add_option("--design", design, "A, B, C1, C2, D1..D5")->required();

  auto* sweep = app.add_subcommand("sweep", "minimum-hop-count sweep");
  std::vector<std::string> designs;
  sweep->add_option("--designs", designs, "subset of designs")->delimiter(',');

  auto* sched = app.add_subcommand("schedule", "common-signaling schedule");
  std::string scheme = "half_slot";
  int n_hops = 62;
  bool cosched = false;
  sched->add_option("--scheme", scheme,
                    "half_slot, full_slot, extra_sweep, extra_sweep_160");
  sched->add_option("--n-hops", n_hops, "hop count");
  sched->add_flag("--msg4-coscheduled", cosched, "160 ms single-sweep variant");

  auto* rep = app.add_subcommand("report", "summary bundle of layouts and schedules");

  CLI11_PARSE(app, argc, argv);
  try {
    if (lay->parsed()) return run_layout(common, design);
    if (sweep->parsed()) return run_sweep(common, designs);
    if (sched->parsed()) return run_schedule(common, scheme, n_hops, cosched);
    if (rep->parsed()) return run_report(common);
  } catch (const leobh::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
