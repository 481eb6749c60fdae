// SPDX-License-Identifier: Apache-2.0
//
// Experiment configuration: reference scenario defaults, JSON overrides with
// field-path error reporting, and the named design variants used throughout
// the evaluation (A, B, C1, C2, D1..D5).

#pragma once

#include <string>
#include <vector>

#include "leobh/layout.hpp"
#include "leobh/link.hpp"
#include "leobh/scheduler.hpp"

namespace leobh {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ArrayConfig {
  int n_elements = 512;
  double spacing_wavelengths = 0.65;
  double element_gain_dbi = 4.7;
  double element_power_w = 0.065;
};

struct ExperimentConfig {
  OrbitGeometry orbit;
  ArrayConfig array;
  LinkBudget link;
  double nadir_beamwidth_deg = 3.64;
  double sensing_spacing_km = 15.0;
  SearchPolicy search;
  FrameConfig frame;
  int threads = 0;  // 0: LEOBH_THREADS env or hardware concurrency
  std::string output_dir = ".";

  ArrayGeometry build_reference_array() const;
  void validate() const;
};

// Parses a JSON file of overrides on top of the defaults.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig parse_config(const std::string& json_text);
std::string dump_config(const ExperimentConfig& cfg);

// Named evaluation designs: A, B, C1 (alpha 0.5), C2 (0.75), D1..D5
// (theta_ref 4.8, 6, 7, 7.5, 9 deg).
std::vector<std::string> design_names();
LayoutSpec named_design(const std::string& name, const ExperimentConfig& cfg);

}  // namespace leobh
