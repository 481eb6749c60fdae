// SPDX-License-Identifier: Apache-2.0

#include "leobh/layout.hpp"

#include <stdexcept>

#include "leobh/array.hpp"

namespace leobh {

Design design_from_string(const std::string& s) {
  if (s == "A" || s == "a") return Design::A;
  if (s == "B" || s == "b") return Design::B;
  if (s == "C" || s == "c") return Design::C;
  if (s == "D" || s == "d") return Design::D;
  throw std::invalid_argument("unknown design: " + s);
}

std::string to_string(Design d) {
  switch (d) {
    case Design::A: return "A";
    case Design::B: return "B";
    case Design::C: return "C";
    case Design::D: return "D";
  }
  return "?";
}

void LayoutSpec::validate() const {
  orbit.validate();
  if (nadir_beamwidth_deg <= 0.0)
    throw std::invalid_argument("layout spec: nadir beamwidth must be positive");
  if (design == Design::C && !(alpha > 0.0 && alpha < 1.0))
    throw std::invalid_argument("layout spec: design C needs alpha in (0, 1)");
  if (design == Design::D) {
    const double edge = tilt_from_elevation(orbit.min_elevation_deg, orbit);
    if (!(theta_ref_deg >= nadir_beamwidth_deg && theta_ref_deg <= edge))
      throw std::invalid_argument(
          "layout spec: design D needs theta_ref between the nadir beamwidth "
          "and the edge tilt");
  }
}

namespace {

// Tilt of the outermost beam center (el_min contour).
double edge_tilt(const LayoutSpec& spec) {
  return tilt_from_elevation(spec.orbit.min_elevation_deg, spec.orbit);
}

// Reference footprint radius used by the widening pipeline (0 when the design
// does not widen).
double reference_radius(const LayoutSpec& spec) {
  switch (spec.design) {
    case Design::A:
      return footprint_radius_km(edge_tilt(spec), spec.nadir_beamwidth_deg, spec.orbit);
    case Design::C:
      return footprint_radius_km(spec.alpha * edge_tilt(spec), spec.nadir_beamwidth_deg,
                                 spec.orbit);
    default:
      return 0.0;
  }
}

// Tilt below which Design C widens its beams; A widens everywhere.
double widening_tilt_limit(const LayoutSpec& spec) {
  if (spec.design == Design::A) return 1e9;
  if (spec.design == Design::C) return spec.alpha * edge_tilt(spec);
  return -1.0;
}

}  // namespace

double grid_spacing_km(const LayoutSpec& spec) {
  spec.validate();
  const double s3 = std::sqrt(3.0);
  switch (spec.design) {
    case Design::B:
      return s3 * footprint_radius_km(0.0, spec.nadir_beamwidth_deg, spec.orbit);
    case Design::A:
      return s3 * reference_radius(spec);
    case Design::C:
      return s3 * reference_radius(spec);
    case Design::D:
      return s3 * ground_arc_from_tilt(spec.theta_ref_deg / 2.0, spec.orbit);
  }
  throw std::logic_error("unreachable");
}

std::vector<GridNode> build_hex_grid(double d_g_km, double clip_arc_km) {
  if (d_g_km <= 0.0) throw std::invalid_argument("build_hex_grid: d_g must be positive");
  const double row_h = std::sqrt(3.0) / 2.0 * d_g_km;
  const int nr = static_cast<int>(clip_arc_km / row_h) + 2;
  const int nc = static_cast<int>(clip_arc_km / d_g_km) + 2;
  std::vector<GridNode> out;
  for (int r = -nr; r <= nr; ++r) {
    const double y = r * row_h;
    const double off = (r & 1) ? 0.5 * d_g_km : 0.0;
    for (int q = -nc; q <= nc; ++q) {
      const double x = q * d_g_km + off;
      if (std::hypot(x, y) <= clip_arc_km + 1e-9) out.push_back({x, y, r, q});
    }
  }
  return out;
}

WideningParams widening_params(const TangentPoint& center, const LayoutSpec& spec) {
  spec.validate();
  WideningParams out;
  out.phi_deg = (center.x_km == 0.0 && center.y_km == 0.0)
                    ? 0.0
                    : rad2deg(std::atan2(center.y_km, center.x_km));
  const double bref = reference_radius(spec);
  if (bref <= 0.0) return out;
  const double tilt = pointing_of(center, spec.orbit).tilt_deg;
  if (tilt >= widening_tilt_limit(spec)) return out;

  const double cp = std::cos(deg2rad(out.phi_deg));
  const double sp = std::sin(deg2rad(out.phi_deg));
  constexpr int kSamples = 720;
  double ur_min = 1.0, ur_max = -1.0, ut_min = 1.0, ut_max = -1.0;
  for (int s = 0; s < kSamples; ++s) {
    const double tau = 2.0 * kPi * s / kSamples;
    const TangentPoint p{center.x_km + bref * std::cos(tau),
                         center.y_km + bref * std::sin(tau)};
    const PointingAngles pa = pointing_of(p, spec.orbit);
    const double ur = pa.u * cp + pa.v * sp;
    const double ut = -pa.u * sp + pa.v * cp;
    ur_min = std::min(ur_min, ur);
    ur_max = std::max(ur_max, ur);
    ut_min = std::min(ut_min, ut);
    ut_max = std::max(ut_max, ut);
  }
  // Targets as u-space extents (nadir-equivalent widths): the taper table is
  // calibrated at nadir and a scanned beam keeps its u-space width, so the
  // u-extent is what maps back to the wanted ground footprint.
  out.w_x_deg = rad2deg(ur_max - ur_min);
  out.w_y_deg = rad2deg(ut_max - ut_min);
  return out;
}

BeamLayout build_layout(const LayoutSpec& spec, const GroundPoint& sat_nadir) {
  spec.validate();
  BeamLayout layout;
  layout.spec = spec;
  layout.sat_nadir = sat_nadir;
  layout.d_g_km = grid_spacing_km(spec);
  layout.reference_radius_km = reference_radius(spec);
  const double clip = coverage_arc_km(spec.orbit);
  const auto nodes = build_hex_grid(layout.d_g_km, clip);
  layout.beams.reserve(nodes.size());
  int id = 0;
  for (const auto& n : nodes) {
    Beam b;
    b.id = id++;
    b.center = {n.x_km, n.y_km};
    b.ground = tangent_to_ground(sat_nadir, b.center, spec.orbit);
    b.row = n.row;
    b.col = n.col;
    b.pointing = pointing_of(b.center, spec.orbit);
    const WideningParams wp = widening_params(b.center, spec);
    b.phi_deg = wp.phi_deg;
    b.w_x_deg = wp.w_x_deg;
    b.w_y_deg = wp.w_y_deg;
    b.beta_x = taper_coefficient(b.w_x_deg);
    b.beta_y = taper_coefficient(b.w_y_deg);
    b.br_km = footprint_radius_km(b.pointing.tilt_deg, spec.nadir_beamwidth_deg,
                                  spec.orbit);
    layout.beams.push_back(b);
  }
  return layout;
}

}  // namespace leobh
