// SPDX-License-Identifier: Apache-2.0

#include "leobh/config.hpp"

#include <fstream>

#include <json.hpp>

namespace leobh {

using nlohmann::json;

ArrayGeometry ExperimentConfig::build_reference_array() const {
  const double lam = kSpeedOfLight / link.frequency_hz;
  ArrayGeometry arr = build_array(array.n_elements, array.spacing_wavelengths * lam, lam);
  arr.element_boresight_gain_dbi = array.element_gain_dbi;
  arr.power_per_element_w = array.element_power_w;
  return arr;
}

void ExperimentConfig::validate() const {
  orbit.validate();
  auto positive = [](double v, const char* field) {
    if (!(v > 0.0)) throw ConfigError(std::string(field) + ": must be positive");
  };
  if (array.n_elements < 1) throw ConfigError("array.n_elements: must be >= 1");
  positive(array.spacing_wavelengths, "array.spacing_wavelengths");
  positive(array.element_power_w, "array.element_power_w");
  positive(link.frequency_hz, "link.frequency_hz");
  positive(link.bandwidth_hz, "link.bandwidth_hz");
  positive(nadir_beamwidth_deg, "nadir_beamwidth_deg");
  positive(sensing_spacing_km, "sensing_spacing_km");
  if (search.n_start < 1) throw ConfigError("search.n_start: must be >= 1");
  if (!(search.percentile > 0.0 && search.percentile < 1.0))
    throw ConfigError("search.percentile: must be in (0, 1)");
  if (frame.ssb_period_ms != 20 && frame.ssb_period_ms != 160)
    throw ConfigError("frame.ssb_period_ms: must be 20 or 160");
  if (threads < 0) throw ConfigError("threads: must be >= 0");
}

namespace {

template <typename T>
void read_field(const json& j, const std::string& path, const char* key, T& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(path + key + ": " + e.what());
  }
}

void read_table(const json& j, const std::string& path, const char* key,
                std::vector<std::pair<double, double>>& out) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<std::vector<std::pair<double, double>>>();
  } catch (const json::exception& e) {
    throw ConfigError(path + key + ": " + e.what());
  }
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config parse: ") + e.what());
  }
  ExperimentConfig cfg;
  if (j.contains("orbit")) {
    const auto& o = j["orbit"];
    read_field(o, "orbit.", "earth_radius_km", cfg.orbit.earth_radius_km);
    read_field(o, "orbit.", "orbit_height_km", cfg.orbit.orbit_height_km);
    read_field(o, "orbit.", "min_elevation_deg", cfg.orbit.min_elevation_deg);
  }
  if (j.contains("array")) {
    const auto& a = j["array"];
    read_field(a, "array.", "n_elements", cfg.array.n_elements);
    read_field(a, "array.", "spacing_wavelengths", cfg.array.spacing_wavelengths);
    read_field(a, "array.", "element_gain_dbi", cfg.array.element_gain_dbi);
    read_field(a, "array.", "element_power_w", cfg.array.element_power_w);
  }
  if (j.contains("link")) {
    const auto& l = j["link"];
    read_field(l, "link.", "frequency_hz", cfg.link.frequency_hz);
    read_field(l, "link.", "bandwidth_hz", cfg.link.bandwidth_hz);
    read_field(l, "link.", "sinr_threshold_db", cfg.link.sinr_threshold_db);
    read_table(l, "link.", "atmospheric_loss_db", cfg.link.atmospheric_loss_db);
    read_table(l, "link.", "g_over_t_dbk", cfg.link.g_over_t_dbk);
    cfg.orbit.wavelength_m = kSpeedOfLight / cfg.link.frequency_hz;
  }
  if (j.contains("search")) {
    const auto& s = j["search"];
    read_field(s, "search.", "n_start", cfg.search.n_start);
    read_field(s, "search.", "n_max", cfg.search.n_max);
    read_field(s, "search.", "percentile", cfg.search.percentile);
    read_field(s, "search.", "threshold_db", cfg.search.threshold_db);
  }
  if (j.contains("frame")) {
    const auto& f = j["frame"];
    read_field(f, "frame.", "ssb_period_ms", cfg.frame.ssb_period_ms);
  }
  read_field(j, "", "nadir_beamwidth_deg", cfg.nadir_beamwidth_deg);
  read_field(j, "", "sensing_spacing_km", cfg.sensing_spacing_km);
  read_field(j, "", "threads", cfg.threads);
  read_field(j, "", "output_dir", cfg.output_dir);
  cfg.link.sinr_threshold_db = cfg.search.threshold_db;
  cfg.validate();
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config file not readable: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::string dump_config(const ExperimentConfig& cfg) {
  json j;
  j["orbit"] = {{"earth_radius_km", cfg.orbit.earth_radius_km},
                {"orbit_height_km", cfg.orbit.orbit_height_km},
                {"min_elevation_deg", cfg.orbit.min_elevation_deg}};
  j["array"] = {{"n_elements", cfg.array.n_elements},
                {"spacing_wavelengths", cfg.array.spacing_wavelengths},
                {"element_gain_dbi", cfg.array.element_gain_dbi},
                {"element_power_w", cfg.array.element_power_w}};
  j["link"] = {{"frequency_hz", cfg.link.frequency_hz},
               {"bandwidth_hz", cfg.link.bandwidth_hz},
               {"sinr_threshold_db", cfg.link.sinr_threshold_db},
               {"atmospheric_loss_db", cfg.link.atmospheric_loss_db},
               {"g_over_t_dbk", cfg.link.g_over_t_dbk}};
  j["search"] = {{"n_start", cfg.search.n_start},
                 {"n_max", cfg.search.n_max},
                 {"percentile", cfg.search.percentile},
                 {"threshold_db", cfg.search.threshold_db}};
  j["frame"] = {{"ssb_period_ms", cfg.frame.ssb_period_ms}};
  j["nadir_beamwidth_deg"] = cfg.nadir_beamwidth_deg;
  j["sensing_spacing_km"] = cfg.sensing_spacing_km;
  j["threads"] = cfg.threads;
  j["output_dir"] = cfg.output_dir;
  return j.dump(2);
}

std::vector<std::string> design_names() {
  return {"A", "B", "C1", "C2", "D1", "D2", "D3", "D4", "D5"};
}

LayoutSpec named_design(const std::string& name, const ExperimentConfig& cfg) {
  LayoutSpec spec;
  spec.orbit = cfg.orbit;
  spec.nadir_beamwidth_deg = cfg.nadir_beamwidth_deg;
  if (name == "A") {
    spec.design = Design::A;
  } else if (name == "B") {
    spec.design = Design::B;
  } else if (name == "C1") {
    spec.design = Design::C;
    spec.alpha = 0.5;
  } else if (name == "C2") {
    spec.design = Design::C;
    spec.alpha = 0.75;
  } else if (name.size() == 2 && name[0] == 'D') {
    static const double kThetaRef[5] = {4.8, 6.0, 7.0, 7.5, 9.0};
    const int idx = name[1] - '1';
    if (idx < 0 || idx > 4) throw ConfigError("unknown design: " + name);
    spec.design = Design::D;
    spec.theta_ref_deg = kThetaRef[idx];
  } else {
    throw ConfigError("unknown design: " + name);
  }
  spec.validate();
  return spec;
}

}  // namespace leobh
