// SPDX-License-Identifier: Apache-2.0

#include "leobh/link.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

#include "leobh/threading.hpp"

namespace leobh {

double interp_table(const std::vector<std::pair<double, double>>& table, double x) {
  if (table.empty()) throw std::invalid_argument("interp_table: empty table");
  if (x <= table.front().first) return table.front().second;
  if (x >= table.back().first) return table.back().second;
  for (std::size_t i = 1; i < table.size(); ++i) {
    if (x <= table[i].first) {
      const double t = (x - table[i - 1].first) / (table[i].first - table[i - 1].first);
      return table[i - 1].second + t * (table[i].second - table[i - 1].second);
    }
  }
  return table.back().second;
}

double fspl_linear(double range_m, double wavelength_m) {
  const double r = 4.0 * kPi * range_m / wavelength_m;
  return r * r;
}

ChannelGain channel_gain(const TangentPoint& p, const OrbitGeometry& geo,
                         const ArrayGeometry& arr, const LinkBudget& lb) {
  const PointingAngles pa = pointing_of(p, geo);
  const double fspl = fspl_linear(pa.slant_range_km * 1e3, arr.wavelength_m);
  const double gel = element_gain_linear(deg2rad(pa.tilt_deg), arr);
  const double gt = std::pow(10.0, interp_table(lb.g_over_t_dbk, pa.elevation_deg) / 10.0);
  const double at =
      std::pow(10.0, interp_table(lb.atmospheric_loss_db, pa.elevation_deg) / 10.0);
  ChannelGain g;
  g.u = pa.u;
  g.v = pa.v;
  g.amplitude = std::sqrt(gel * gt / (fspl * at));
  return g;
}

std::vector<cplx> channel_row(const TangentPoint& p, const OrbitGeometry& geo,
                              const ArrayGeometry& arr, const LinkBudget& lb) {
  const PointingAngles pa = pointing_of(p, geo);
  const ChannelGain g = channel_gain(p, geo, arr, lb);
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  // Common range phase; drops out of every |.|^2 quantity but kept for
  // fidelity to the channel definition.
  const double common = std::fmod(k0 * pa.slant_range_km * 1e3, 2.0 * kPi);
  std::vector<cplx> h(arr.n_elements());
  for (int n = 0; n < arr.n_elements(); ++n) {
    const double ph = common - k0 * (arr.x_m[n] * g.u + arr.y_m[n] * g.v);
    h[n] = g.amplitude * cplx(std::cos(ph), std::sin(ph));
  }
  return h;
}

SensingGrid build_sensing_grid(const BeamLayout& layout, double spacing_km) {
  SensingGrid grid;
  grid.spacing_km = spacing_km;
  const OrbitGeometry& geo = layout.spec.orbit;
  const double tilt_lim =
      effective_max_tilt(geo, layout.spec.nadir_beamwidth_deg);
  const double clip = ground_arc_from_tilt(tilt_lim, geo);
  for (const auto& n : build_hex_grid(spacing_km, clip))
    grid.points.push_back({n.x_km, n.y_km});
  grid.serving_beam.resize(grid.points.size());
  const auto& beams = layout.beams;
  if (beams.empty()) throw std::invalid_argument("build_sensing_grid: empty layout");
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    int best = 0;
    double best_d2 = 1e300;
    for (const auto& b : beams) {
      const double dx = grid.points[i].x_km - b.center.x_km;
      const double dy = grid.points[i].y_km - b.center.y_km;
      const double d2 = dx * dx + dy * dy;
      if (d2 < best_d2) {
        best_d2 = d2;
        best = b.id;
      }
    }
    grid.serving_beam[i] = best;
  }
  return grid;
}

PowerScheme default_scheme(const LayoutSpec& spec) {
  switch (spec.design) {
    case Design::B:
    case Design::C:
      return PowerScheme::SnrEqualizing;
    case Design::D:
      // Only the densest variant benefits from equalization.
      return spec.theta_ref_deg < 5.0 ? PowerScheme::SnrEqualizing : PowerScheme::Equal;
    case Design::A:
      return PowerScheme::Equal;
  }
  return PowerScheme::Equal;
}

namespace {

// Unit-power beamformer for one beam.
BeamWeights beam_former(const Beam& b, const ArrayGeometry& arr) {
  return tapered_weights(arr, b.pointing.u, b.pointing.v, b.phi_deg, b.beta_x,
                         b.beta_y, 1.0);
}

// |hc_k w_k|^2 at the beam's own footprint center for a unit-power beamformer.
double center_gain(const Beam& b, const BeamWeights& w, const BeamLayout& layout,
                   const ArrayGeometry& arr, const LinkBudget& lb) {
  const ChannelGain g = channel_gain(b.center, layout.spec.orbit, arr, lb);
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  cplx acc(0.0, 0.0);
  for (int n = 0; n < arr.n_elements(); ++n) {
    const double ph = -k0 * (arr.x_m[n] * g.u + arr.y_m[n] * g.v);
    acc += w.w[n] * cplx(std::cos(ph), std::sin(ph));
  }
  return std::norm(acc) * g.amplitude * g.amplitude;
}

}  // namespace

std::vector<double> allocate_power(PowerScheme scheme, const std::vector<int>& active,
                                   const BeamLayout& layout, const ArrayGeometry& arr,
                                   const LinkBudget& lb) {
  if (active.empty()) throw std::invalid_argument("allocate_power: empty active set");
  const double total = arr.total_power_w();
  std::vector<double> p(active.size());
  if (scheme == PowerScheme::Equal) {
    std::fill(p.begin(), p.end(), total / active.size());
    return p;
  }
  std::vector<double> s(active.size());
  for (std::size_t k = 0; k < active.size(); ++k) {
    const Beam& b = layout.beams[active[k]];
    s[k] = center_gain(b, beam_former(b, arr), layout, arr, lb);
    if (s[k] <= 0.0) throw std::domain_error("allocate_power: degenerate beam");
  }
  const double sum_s = std::accumulate(s.begin(), s.end(), 0.0);
  double sum_c = 0.0;
  for (std::size_t k = 0; k < active.size(); ++k) sum_c += sum_s / s[k];
  for (std::size_t k = 0; k < active.size(); ++k)
    p[k] = total * (sum_s / s[k]) / sum_c;
  return p;
}

SinrMap evaluate_sinr(const BeamLayout& layout, const HopPlan& plan,
                      const SensingGrid& grid, PowerScheme scheme,
                      const ArrayGeometry& arr, const LinkBudget& lb,
                      int n_threads) {
  const int na = arr.n_elements();
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  const double sigma2 = lb.noise_power_w();
  const std::size_t n_pts = grid.points.size();

  SinrMap map;
  map.sinr.assign(n_pts, 0.0);
  map.serving_beam = grid.serving_beam;
  map.hop_of_point.resize(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i)
    map.hop_of_point[i] = plan.index_of[grid.serving_beam[i]];

  // Per-beam unit-power weights, built once.
  std::vector<BeamWeights> formers;
  formers.reserve(layout.beams.size());
  for (const auto& b : layout.beams) formers.push_back(beam_former(b, arr));

  std::vector<ChannelGain> gains(n_pts);
  for (std::size_t i = 0; i < n_pts; ++i)
    gains[i] = channel_gain(grid.points[i], layout.spec.orbit, arr, lb);

  std::vector<std::vector<std::size_t>> bucket(plan.n_hops);
  for (std::size_t i = 0; i < n_pts; ++i) bucket[map.hop_of_point[i]].push_back(i);

  for (int ih = 0; ih < plan.n_hops; ++ih) {
    const auto& act = plan.active[ih];
    if (act.empty() || bucket[ih].empty()) continue;
    const std::vector<double> power = allocate_power(scheme, act, layout, arr, lb);
    const auto& pts = bucket[ih];
    parallel_for(pts.size(), n_threads, [&](std::size_t t) {
      const std::size_t i = pts[t];
      const ChannelGain& g = gains[i];
      // Steering phasors shared by every beam of this hop.
      std::vector<cplx> e(na);
      for (int n = 0; n < na; ++n) {
        const double ph = -k0 * (arr.x_m[n] * g.u + arr.y_m[n] * g.v);
        e[n] = cplx(std::cos(ph), std::sin(ph));
      }
      double total_rx = 0.0, signal = 0.0;
      for (std::size_t j = 0; j < act.size(); ++j) {
        const auto& w = formers[act[j]].w;
        cplx acc(0.0, 0.0);
        for (int n = 0; n < na; ++n) acc += e[n] * w[n];
        const double rx = std::norm(acc) * g.amplitude * g.amplitude * power[j];
        total_rx += rx;
        if (act[j] == grid.serving_beam[i]) signal = rx;
      }
      map.sinr[i] = signal / (total_rx - signal + sigma2);
    });
  }
  return map;
}

double percentile_db(const SinrMap& map, double p) {
  if (map.sinr.empty()) throw std::invalid_argument("percentile_db: empty map");
  if (!(p > 0.0 && p < 1.0)) throw std::invalid_argument("percentile_db: p in (0,1)");
  std::vector<double> v = map.sinr;
  std::sort(v.begin(), v.end());
  const double pos = p * (v.size() - 1);
  const std::size_t lo = static_cast<std::size_t>(pos);
  const double frac = pos - lo;
  // Interpolation in the dB domain (pinned convention).
  const double lo_db = 10.0 * std::log10(v[lo]);
  if (lo + 1 >= v.size() || frac == 0.0) return lo_db;
  return lo_db * (1.0 - frac) + 10.0 * std::log10(v[lo + 1]) * frac;
}

MinHopsResult min_hops(const BeamLayout& layout, PowerScheme scheme,
                       const SensingGrid& grid, const ArrayGeometry& arr,
                       const LinkBudget& lb, const SearchPolicy& policy,
                       int n_threads) {
  const int k_beams = layout.n_beams();
  const int cap = policy.n_max > 0 ? std::min(policy.n_max, k_beams) : k_beams;
  MinHopsResult res;
  std::map<int, double> cache;
  auto p5 = [&](int n) {
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    const HopPlan plan = assign_hop_indices(layout.beams, n);
    const SinrMap map = evaluate_sinr(layout, plan, grid, scheme, arr, lb, n_threads);
    const double v = percentile_db(map, policy.percentile);
    cache[n] = v;
    ++res.evaluations;
    return v;
  };
  auto passes = [&](int n) { return p5(n) >= policy.threshold_db; };

  int hi = std::min(std::max(policy.n_start, 1), cap);
  while (!passes(hi) && hi < cap) hi = std::min(hi * 2, cap);
  if (!passes(hi)) {
    res.achievable = false;
    res.n_hops = cap;
    res.p5_db = cache[cap];
    return res;
  }
  int lo = hi;  // largest known-failing below hi
  while (lo > 1) {
    const int probe = std::max(lo / 2, 1);
    if (passes(probe)) {
      hi = probe;
      lo = probe;
      if (probe == 1) { lo = 0; break; }
    } else {
      lo = probe;
      break;
    }
  }
  while (hi - lo > 1) {
    const int mid = lo + (hi - lo) / 2;
    if (passes(mid)) hi = mid; else lo = mid;
  }
  // SINR vs N_h is not proven monotone: walk down while the predecessor
  // still passes.
  while (hi > 1 && passes(hi - 1)) --hi;
  res.achievable = true;
  res.n_hops = hi;
  res.p5_db = cache[hi];
  return res;
}

}  // namespace leobh
