// SPDX-License-Identifier: Apache-2.0
//
// Earth-fixed hexagonal beam layouts: grid spacing rules for the four
// footprint designs, tangent-plane hex grid construction, and the per-beam
// widening-parameter pipeline (footprint contour mapped to the u-v plane).

#pragma once

#include <string>
#include <vector>

#include "leobh/array.hpp"
#include "leobh/geometry.hpp"

namespace leobh {

enum class Design { A, B, C, D };

Design design_from_string(const std::string& s);
std::string to_string(Design d);

struct LayoutSpec {
  Design design = Design::B;
  double alpha = 0.0;          // Design C only, in (0, 1)
  double theta_ref_deg = 0.0;  // Design D only
  OrbitGeometry orbit;
  double nadir_beamwidth_deg = 3.64;

  void validate() const;
};

struct Beam {
  int id = 0;
  TangentPoint center;   // nadir-centred tangent plane, km
  GroundPoint ground;    // same position on the sphere
  int row = 0, col = 0;  // hex axial coordinates (row along latitude)
  PointingAngles pointing;
  double phi_deg = 0.0;  // radial azimuth, rotation of the widening axes
  double w_x_deg = 0.0, w_y_deg = 0.0;
  double beta_x = 0.0, beta_y = 0.0;
  double br_km = 0.0;  // nominal footprint radius at this tilt
};

struct BeamLayout {
  LayoutSpec spec;
  GroundPoint sat_nadir;
  double d_g_km = 0.0;
  double reference_radius_km = 0.0;  // widening reference circle (A and C)
  std::vector<Beam> beams;

  int n_beams() const { return static_cast<int>(beams.size()); }
};

struct GridNode {
  double x_km = 0.0, y_km = 0.0;
  int row = 0, col = 0;
};

double grid_spacing_km(const LayoutSpec& spec);

// Hexagonal lattice in the tangent plane, rows along latitude, odd rows
// shifted east by d_g/2, one node at the origin, clipped to the given ground
// arc radius. Row-major ordering (south to north, west to east).
std::vector<GridNode> build_hex_grid(double d_g_km, double clip_arc_km);

struct WideningParams {
  double w_x_deg = 0.0, w_y_deg = 0.0;
  double phi_deg = 0.0;
};

// Steps: place the reference footprint circle on the ground at the beam
// center, map its contour into the u-v plane, take the axis-aligned extents
// along the radial/tangential directions as the target widths.
WideningParams widening_params(const TangentPoint& center, const LayoutSpec& spec);

BeamLayout build_layout(const LayoutSpec& spec, const GroundPoint& sat_nadir = {});

}  // namespace leobh
