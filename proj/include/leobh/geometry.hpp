// SPDX-License-Identifier: Apache-2.0
//
// Spherical-Earth orbital geometry for a LEO satellite: elevation/tilt/central
// angle conversions, slant range, beam footprint radii on the curved Earth and
// ground <-> antenna (u-v) coordinate transforms.

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace leobh {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct OrbitGeometry {
  double earth_radius_km = 6371.0;
  double orbit_height_km = 1300.0;
  double min_elevation_deg = 30.0;
  double wavelength_m = kSpeedOfLight / 20e9;

  void validate() const {
    if (earth_radius_km <= 0 || orbit_height_km <= 0 || wavelength_m <= 0)
      throw std::invalid_argument("orbit geometry: lengths must be positive");
    if (min_elevation_deg <= 0 || min_elevation_deg >= 90)
      throw std::invalid_argument("orbit geometry: el_min outside (0, 90)");
  }
};

// Positions on the spherical Earth.
struct GroundPoint {
  double lat_deg = 0.0;
  double lon_deg = 0.0;
};

// Same position expressed in the nadir-centred azimuthal-equidistant tangent
// plane (x east, y north, km). Grid construction and SINR sensing work here;
// exports convert back to lat/lon.
struct TangentPoint {
  double x_km = 0.0;
  double y_km = 0.0;
};

struct PointingAngles {
  double tilt_deg = 0.0;     // from nadir
  double azimuth_deg = 0.0;  // from +x (east), counter-clockwise
  double u = 0.0;            // sin(tilt) cos(az)
  double v = 0.0;            // sin(tilt) sin(az)
  double slant_range_km = 0.0;
  double elevation_deg = 90.0;
};

// sin(theta) = R cos(el) / (R + h)
inline double tilt_from_elevation(double el_deg, const OrbitGeometry& geo) {
  const double s = geo.earth_radius_km * std::cos(deg2rad(el_deg)) /
                   (geo.earth_radius_km + geo.orbit_height_km);
  return rad2deg(std::asin(s));
}

inline double elevation_from_tilt(double tilt_deg, const OrbitGeometry& geo) {
  double c = (geo.earth_radius_km + geo.orbit_height_km) *
             std::sin(deg2rad(tilt_deg)) / geo.earth_radius_km;
  if (c > 1.0) throw std::domain_error("tilt beyond horizon");
  return rad2deg(std::acos(c));
}

struct ArcRange {
  double central_angle_deg = 0.0;
  double slant_range_km = 0.0;
  double ground_arc_km = 0.0;
};

// Spherical-triangle closure: el + tilt + gamma = 90 deg.
inline ArcRange central_angle_and_range(double el_deg, const OrbitGeometry& geo) {
  const double tilt = tilt_from_elevation(el_deg, geo);
  ArcRange out;
  out.central_angle_deg = 90.0 - el_deg - tilt;
  out.ground_arc_km = geo.earth_radius_km * deg2rad(out.central_angle_deg);
  const double re = geo.earth_radius_km;
  const double rs = re + geo.orbit_height_km;
  const double g = deg2rad(out.central_angle_deg);
  // Law of cosines; stable at nadir where sin(tilt) vanishes.
  out.slant_range_km = std::sqrt(re * re + rs * rs - 2.0 * re * rs * std::cos(g));
  return out;
}

// Ground arc distance from nadir for a given boresight tilt (signed).
inline double ground_arc_from_tilt(double tilt_deg, const OrbitGeometry& geo) {
  const double s = tilt_deg < 0 ? -1.0 : 1.0;
  const double t = std::fabs(tilt_deg);
  if (t == 0.0) return 0.0;
  const double el = elevation_from_tilt(t, geo);
  return s * geo.earth_radius_km * deg2rad(90.0 - t - el);
}

// Coverage radius on the ground (arc to the el_min contour).
inline double coverage_arc_km(const OrbitGeometry& geo) {
  return central_angle_and_range(geo.min_elevation_deg, geo).ground_arc_km;
}

// Tilt of the outermost beam centre whose scan-broadened half-beamwidth still
// reaches the el_min contour (effective maximum tilt).
inline double effective_max_tilt(const OrbitGeometry& geo, double nadir_beamwidth_deg) {
  const double edge = tilt_from_elevation(geo.min_elevation_deg, geo);
  const double t = edge - (nadir_beamwidth_deg / 2.0) / std::cos(deg2rad(edge));
  return t < 0.0 ? 0.0 : t;
}

// Half the ground-arc between the intersections of the cone directions
// tilt -/+ bw/2 with the sphere, along the radial cut.
inline double footprint_radius_km(double tilt_deg, double beamwidth_deg,
                                  const OrbitGeometry& geo) {
  const double hi = tilt_deg + beamwidth_deg / 2.0;
  const double lo = tilt_deg - beamwidth_deg / 2.0;
  const double horizon = rad2deg(std::asin(
      geo.earth_radius_km / (geo.earth_radius_km + geo.orbit_height_km)));
  if (hi >= horizon) throw std::domain_error("footprint cone misses the Earth");
  return (ground_arc_from_tilt(hi, geo) - ground_arc_from_tilt(lo, geo)) / 2.0;
}

// Radial -3 dB footprint radius of a beam steered to `tilt`, widening the
// aperture beamwidth by the scan factor 1/cos(tilt).
inline double scanned_footprint_radius_km(double tilt_deg, double nadir_beamwidth_deg,
                                          const OrbitGeometry& geo) {
  const double bw = nadir_beamwidth_deg / std::cos(deg2rad(tilt_deg));
  return footprint_radius_km(tilt_deg, bw, geo);
}

// Pointing record for a tangent-plane position seen from the satellite.
inline PointingAngles pointing_of(const TangentPoint& p, const OrbitGeometry& geo) {
  const double d = std::hypot(p.x_km, p.y_km);
  const double g = d / geo.earth_radius_km;  // central angle, rad
  PointingAngles out;
  const double tilt = std::atan2(geo.earth_radius_km * std::sin(g),
                                 geo.orbit_height_km +
                                     geo.earth_radius_km * (1.0 - std::cos(g)));
  out.tilt_deg = rad2deg(tilt);
  out.elevation_deg = 90.0 - out.tilt_deg - rad2deg(g);
  if (out.elevation_deg < 0.0) throw std::domain_error("point beyond horizon");
  out.slant_range_km = d == 0.0 ? geo.orbit_height_km
                                : geo.earth_radius_km * std::sin(g) / std::sin(tilt);
  if (d > 0.0) {
    out.azimuth_deg = rad2deg(std::atan2(p.y_km, p.x_km));
    out.u = std::sin(tilt) * p.x_km / d;
    out.v = std::sin(tilt) * p.y_km / d;
  }
  return out;
}

// Azimuthal-equidistant projection about the satellite nadir.
inline TangentPoint ground_to_tangent(const GroundPoint& nadir, const GroundPoint& p,
                                      const OrbitGeometry& geo) {
  const double la1 = deg2rad(nadir.lat_deg), lo1 = deg2rad(nadir.lon_deg);
  const double la2 = deg2rad(p.lat_deg), lo2 = deg2rad(p.lon_deg);
  const double dlo = lo2 - lo1;
  const double cg = std::sin(la1) * std::sin(la2) +
                    std::cos(la1) * std::cos(la2) * std::cos(dlo);
  const double g = std::acos(std::clamp(cg, -1.0, 1.0));
  if (g == 0.0) return {};
  // bearing from north, clockwise
  const double by = std::sin(dlo) * std::cos(la2);
  const double bx = std::cos(la1) * std::sin(la2) -
                    std::sin(la1) * std::cos(la2) * std::cos(dlo);
  const double bearing = std::atan2(by, bx);
  const double arc = geo.earth_radius_km * g;
  return {arc * std::sin(bearing), arc * std::cos(bearing)};
}

inline GroundPoint tangent_to_ground(const GroundPoint& nadir, const TangentPoint& t,
                                     const OrbitGeometry& geo) {
  const double d = std::hypot(t.x_km, t.y_km);
  if (d == 0.0) return nadir;
  const double g = d / geo.earth_radius_km;
  const double bearing = std::atan2(t.x_km, t.y_km);
  const double la1 = deg2rad(nadir.lat_deg), lo1 = deg2rad(nadir.lon_deg);
  const double la2 = std::asin(std::sin(la1) * std::cos(g) +
                               std::cos(la1) * std::sin(g) * std::cos(bearing));
  const double lo2 = lo1 + std::atan2(std::sin(bearing) * std::sin(g) * std::cos(la1),
                                      std::cos(g) - std::sin(la1) * std::sin(la2));
  GroundPoint out{rad2deg(la2), rad2deg(lo2)};
  if (out.lon_deg > 180.0) out.lon_deg -= 360.0;
  if (out.lon_deg <= -180.0) out.lon_deg += 360.0;
  return out;
}

inline PointingAngles ground_to_uv(const GroundPoint& nadir, const GroundPoint& p,
                                   const OrbitGeometry& geo) {
  return pointing_of(ground_to_tangent(nadir, p, geo), geo);
}

}  // namespace leobh
