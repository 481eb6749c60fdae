// SPDX-License-Identifier: Apache-2.0
//
// Downlink channel model, per-hop power allocation, SINR maps over a dense
// sensing grid, percentile statistics, and the minimum-hop-count search.

#pragma once

#include <optional>
#include <vector>

#include "leobh/array.hpp"
#include "leobh/hopping.hpp"
#include "leobh/layout.hpp"

namespace leobh {

struct LinkBudget {
  double frequency_hz = 20e9;
  double bandwidth_hz = 200e6;
  double boltzmann = 1.380649e-23;
  double sinr_threshold_db = 3.0;
  // (elevation deg, dB) pairs, ascending elevation; linear interpolation,
  // clamped outside the table.
  std::vector<std::pair<double, double>> atmospheric_loss_db = {
      {30.0, 1.1}, {45.0, 0.71}, {90.0, 0.5}};
  std::vector<std::pair<double, double>> g_over_t_dbk = {
      {30.0, 8.0}, {45.0, 10.0}, {90.0, 11.0}};

  double noise_power_w() const { return boltzmann * bandwidth_hz; }
};

double interp_table(const std::vector<std::pair<double, double>>& table, double x);
double fspl_linear(double range_m, double wavelength_m);

// Complex channel row for a ground point: amplitude from the link budget and
// element pattern, common range phase, per-element steering phase.
std::vector<cplx> channel_row(const TangentPoint& p, const OrbitGeometry& geo,
                              const ArrayGeometry& arr, const LinkBudget& lb);

// Amplitude part only (shared by all elements) plus the u-v direction.
struct ChannelGain {
  double u = 0.0, v = 0.0;
  double amplitude = 0.0;  // sqrt(g_el * G/T / (FSPL * L_at))
};
ChannelGain channel_gain(const TangentPoint& p, const OrbitGeometry& geo,
                         const ArrayGeometry& arr, const LinkBudget& lb);

struct SensingGrid {
  std::vector<TangentPoint> points;
  double spacing_km = 15.0;
  std::vector<int> serving_beam;  // per point, nearest footprint center
};

// Hexagonal sensing grid clipped to the tilt range reachable by beam
// footprints (effective maximum tilt), assigned to nearest beam centers.
SensingGrid build_sensing_grid(const BeamLayout& layout, double spacing_km = 15.0);

enum class PowerScheme { Equal, SnrEqualizing };

// Reference default: equalizing for B, C and the densest D variant.
PowerScheme default_scheme(const LayoutSpec& spec);

// Per-beam transmit powers for one active set; both schemes conserve
// N_a * P_a total.
std::vector<double> allocate_power(PowerScheme scheme, const std::vector<int>& active,
                                   const BeamLayout& layout, const ArrayGeometry& arr,
                                   const LinkBudget& lb);

struct SinrMap {
  std::vector<double> sinr;  // linear, per sensing point
  std::vector<int> serving_beam;
  std::vector<int> hop_of_point;
};

SinrMap evaluate_sinr(const BeamLayout& layout, const HopPlan& plan,
                      const SensingGrid& grid, PowerScheme scheme,
                      const ArrayGeometry& arr, const LinkBudget& lb,
                      int n_threads = 1);

// Linear-interpolated empirical quantile of the SINR in dB.
double percentile_db(const SinrMap& map, double p);

struct SearchPolicy {
  int n_start = 8;
  int n_max = 0;  // 0: one beam per hop (N_h = K)
  double percentile = 0.05;
  double threshold_db = 3.0;
};

struct MinHopsResult {
  bool achievable = false;
  int n_hops = 0;        // smallest verified passing N_h when achievable
  double p5_db = 0.0;    // percentile at the returned N_h (or at the cap)
  int evaluations = 0;
};

// Exponential bracketing, bisection inside the bracket, then downward
// verification (N_h - 1 must fail).
MinHopsResult min_hops(const BeamLayout& layout, PowerScheme scheme,
                       const SensingGrid& grid, const ArrayGeometry& arr,
                       const LinkBudget& lb, const SearchPolicy& policy = {},
                       int n_threads = 1);

}  // namespace leobh
