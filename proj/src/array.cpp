// SPDX-License-Identifier: Apache-2.0

#include "leobh/array.hpp"

#include "leobh/taper_table.hpp"

namespace leobh {

ArrayGeometry build_array(int n_elements, double spacing_m, double wavelength_m) {
  if (n_elements < 1) throw std::invalid_argument("build_array: N must be >= 1");
  struct Cand {
    double x, y, r, az;
    int idx;
  };
  const int half = static_cast<int>(std::sqrt(static_cast<double>(n_elements))) + 3;
  std::vector<Cand> cand;
  cand.reserve((2 * half + 1) * (2 * half + 1));
  int idx = 0;
  double cx = 0.0, cy = 0.0;
  for (int r = -half; r <= half; ++r) {
    for (int q = -half; q <= half; ++q) {
      const double x = (q + 0.5 * (r & 1)) * spacing_m;
      const double y = r * std::sqrt(3.0) / 2.0 * spacing_m;
      cand.push_back({x, y, 0.0, 0.0, idx++});
      cx += x;
      cy += y;
    }
  }
  cx /= cand.size();
  cy /= cand.size();
  for (auto& c : cand) {
    c.x -= cx;
    c.y -= cy;
    // round keeps the radial sort stable across platforms; ties fall through
    // to azimuth then construction order
    c.r = std::round(std::hypot(c.x, c.y) * 1e9) / 1e9;
    c.az = std::atan2(c.y, c.x);
  }
  std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
    if (a.r != b.r) return a.r < b.r;
    if (a.az != b.az) return a.az < b.az;
    return a.idx < b.idx;
  });
  ArrayGeometry arr;
  arr.element_spacing_m = spacing_m;
  arr.wavelength_m = wavelength_m;
  arr.x_m.resize(n_elements);
  arr.y_m.resize(n_elements);
  double mx = 0.0, my = 0.0;
  for (int n = 0; n < n_elements; ++n) {
    mx += cand[n].x;
    my += cand[n].y;
  }
  mx /= n_elements;
  my /= n_elements;
  for (int n = 0; n < n_elements; ++n) {
    arr.x_m[n] = cand[n].x - mx;
    arr.y_m[n] = cand[n].y - my;
  }
  return arr;
}

BeamWeights tapered_weights(const ArrayGeometry& arr, double u, double v,
                            double rotation_deg, double beta_x, double beta_y,
                            double power_w) {
  const int na = arr.n_elements();
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  const double amp = std::sqrt(power_w / na);
  const double rap = arr.aperture_radius_m();
  const double cp = std::cos(deg2rad(rotation_deg));
  const double sp = std::sin(deg2rad(rotation_deg));
  BeamWeights bw;
  bw.w.resize(na);
  bw.power_w = power_w;
  bw.u = u;
  bw.v = v;
  bw.rotation_deg = rotation_deg;
  for (int n = 0; n < na; ++n) {
    const double xr = (arr.x_m[n] * cp - arr.y_m[n] * sp) / rap;
    const double yr = (arr.x_m[n] * sp + arr.y_m[n] * cp) / rap;
    const double ph = k0 * (arr.x_m[n] * u + arr.y_m[n] * v) + beta_x * xr * xr +
                      beta_y * yr * yr;
    bw.w[n] = amp * cplx(std::cos(ph), std::sin(ph));
  }
  return bw;
}

BeamWeights phased_weights(const ArrayGeometry& arr, double u, double v, double power_w) {
  return tapered_weights(arr, u, v, 0.0, 0.0, 0.0, power_w);
}

double taper_coefficient(double target_width_deg) {
  // Envelope rule: the strongest taper whose measured width stays at or below
  // the target. Width is not monotone in beta (flat-top splitting), so a
  // largest-qualifying scan over the calibration grid is used instead of
  // inversion.
  double best = 0.0;
  for (const auto& e : kTaperTable)
    if (e.width_deg <= target_width_deg) best = e.beta_rad;
  return best;
}

BeamWeights widened_weights(const ArrayGeometry& arr, double u, double v,
                            double rotation_deg, double w_x_deg, double w_y_deg,
                            double power_w) {
  BeamWeights bw = tapered_weights(arr, u, v, rotation_deg,
                                   taper_coefficient(w_x_deg),
                                   taper_coefficient(w_y_deg), power_w);
  bw.w_x_deg = w_x_deg;
  bw.w_y_deg = w_y_deg;
  return bw;
}

std::vector<cplx> array_factor(const ArrayGeometry& arr, const BeamWeights& bw,
                               const std::vector<std::pair<double, double>>& uv) {
  const int na = arr.n_elements();
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  std::vector<cplx> out(uv.size());
  for (std::size_t i = 0; i < uv.size(); ++i) {
    const double u = uv[i].first, v = uv[i].second;
    const double s2 = u * u + v * v;
    if (s2 > 1.0) throw std::domain_error("array_factor: direction outside unit disk");
    cplx acc(0.0, 0.0);
    for (int n = 0; n < na; ++n) {
      const double ph = -k0 * (arr.x_m[n] * u + arr.y_m[n] * v);
      acc += bw.w[n] * cplx(std::cos(ph), std::sin(ph));
    }
    const double theta = std::asin(std::sqrt(s2));
    out[i] = acc * std::sqrt(element_gain_linear(theta, arr));
  }
  return out;
}

double measure_beamwidth(const ArrayGeometry& arr, const BeamWeights& bw,
                         double cut_azimuth_deg, double drop_db, double span_deg,
                         double step_deg) {
  // Great-circle cut through the pointing direction. For a nadir beam the cut
  // azimuth is absolute; for a scanned beam it is measured from the radial
  // direction (0 = radial, 90 = transverse).
  const double st = std::clamp(std::hypot(bw.u, bw.v), 0.0, 1.0);
  const double th0 = std::asin(st);
  const double phip = st == 0.0 ? 0.0 : std::atan2(bw.v, bw.u);
  const double e0[3] = {std::sin(th0) * std::cos(phip),
                        std::sin(th0) * std::sin(phip), std::cos(th0)};
  const double tr[3] = {std::cos(th0) * std::cos(phip),
                        std::cos(th0) * std::sin(phip), -std::sin(th0)};
  const double tt[3] = {-std::sin(phip), std::cos(phip), 0.0};
  const double chi = deg2rad(cut_azimuth_deg);
  const double tv[3] = {std::cos(chi) * tr[0] + std::sin(chi) * tt[0],
                        std::cos(chi) * tr[1] + std::sin(chi) * tt[1],
                        std::cos(chi) * tr[2] + std::sin(chi) * tt[2]};
  std::vector<std::pair<double, double>> uv;
  std::vector<double> offs;
  for (double d = -span_deg; d <= span_deg; d += step_deg) {
    const double cd = std::cos(deg2rad(d)), sd = std::sin(deg2rad(d));
    const double z = e0[2] * cd + tv[2] * sd;
    if (z < 0.0) continue;  // back hemisphere
    uv.push_back({e0[0] * cd + tv[0] * sd, e0[1] * cd + tv[1] * sd});
    offs.push_back(d);
  }
  const auto f = array_factor(arr, bw, uv);
  double peak = 0.0;
  for (const auto& c : f) peak = std::max(peak, std::norm(c));
  if (peak <= 0.0) throw std::runtime_error("measure_beamwidth: no main lobe");
  const double floor = peak / std::pow(10.0, drop_db / 10.0);
  std::size_t lo = f.size(), hi = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (std::norm(f[i]) >= floor) {
      lo = std::min(lo, i);
      hi = std::max(hi, i);
    }
  }
  return offs[hi] - offs[lo];
}

double beamwidth_phi_averaged(const ArrayGeometry& arr, const BeamWeights& bw,
                              double drop_db) {
  const double cuts[] = {0.0, 30.0, 60.0, 90.0};
  double acc = 0.0;
  for (double c : cuts) acc += measure_beamwidth(arr, bw, c, drop_db);
  return acc / 4.0;
}

}  // namespace leobh
