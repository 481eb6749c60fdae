// SPDX-License-Identifier: Apache-2.0
//
// Direct-radiating-array model: hexagonal element placement with circular
// truncation, cos^2 element pattern, phased beamformers, quadratic phase-taper
// beam widening and far-field pattern evaluation.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "leobh/geometry.hpp"

namespace leobh {

using cplx = std::complex<double>;

struct ArrayGeometry {
  std::vector<double> x_m;  // element positions
  std::vector<double> y_m;
  double element_spacing_m = 0.0;
  double element_boresight_gain_dbi = 4.7;
  double power_per_element_w = 0.065;
  double wavelength_m = kSpeedOfLight / 20e9;

  int n_elements() const { return static_cast<int>(x_m.size()); }
  double aperture_radius_m() const {
    double r = 0.0;
    for (int n = 0; n < n_elements(); ++n) r = std::max(r, std::hypot(x_m[n], y_m[n]));
    return r;
  }
  double total_power_w() const { return power_per_element_w * n_elements(); }
};

struct BeamWeights {
  std::vector<cplx> w;
  double power_w = 0.0;
  double u = 0.0, v = 0.0;
  double w_x_deg = 0.0, w_y_deg = 0.0;  // target widenings
  double rotation_deg = 0.0;
};

// Hexagonal lattice, the N elements closest to the centroid retained (ties
// broken by azimuth angle then index), re-centred at the centroid.
ArrayGeometry build_array(int n_elements, double spacing_m,
                          double wavelength_m = kSpeedOfLight / 20e9);

inline double element_gain_linear(double theta_rad, const ArrayGeometry& arr) {
  const double c = std::cos(theta_rad);
  return std::pow(10.0, arr.element_boresight_gain_dbi / 10.0) * c * c;
}

// Uniform-amplitude linear-phase steering weights (total power = power_w).
BeamWeights phased_weights(const ArrayGeometry& arr, double u, double v, double power_w);

// Phase-only widening: quadratic taper over coordinates rotated by
// rotation_deg, with per-axis strengths from the calibration table mapping
// target width (deg) -> taper coefficient (rad at the aperture edge).
BeamWeights widened_weights(const ArrayGeometry& arr, double u, double v,
                            double rotation_deg, double w_x_deg, double w_y_deg,
                            double power_w);

// Raw taper access used by the calibration tooling.
BeamWeights tapered_weights(const ArrayGeometry& arr, double u, double v,
                            double rotation_deg, double beta_x, double beta_y,
                            double power_w);

// Taper coefficient for a target -3 dB width; interpolates the calibration
// table (0 below the natural beamwidth, clamped above the table range).
double taper_coefficient(double target_width_deg);

// Field values  sum_n w_n exp(-j k (x_n u + y_n v)) * sqrt(element_gain),
// fixed-order summation.
std::vector<cplx> array_factor(const ArrayGeometry& arr, const BeamWeights& bw,
                               const std::vector<std::pair<double, double>>& uv);

// -3 dB (or a custom drop) width of the power pattern along the cut of
// azimuth `cut_azimuth_deg` through the pointing direction. Width is taken
// between the outermost crossings to remain defined under flat-top ripple.
double measure_beamwidth(const ArrayGeometry& arr, const BeamWeights& bw,
                         double cut_azimuth_deg, double drop_db = 3.0,
                         double span_deg = 30.0, double step_deg = 0.01);

double beamwidth_phi_averaged(const ArrayGeometry& arr, const BeamWeights& bw,
                              double drop_db = 3.0);

}  // namespace leobh
