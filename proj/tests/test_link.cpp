// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "leobh/config.hpp"
#include "leobh/link.hpp"

using namespace leobh;

namespace {

const ExperimentConfig kCfg{};

// Direct-summation SINR oracle: explicit channel rows and weight vectors.
double oracle_sinr(const BeamLayout& layout, const HopPlan& plan,
                   const SensingGrid& grid, PowerScheme scheme,
                   const ArrayGeometry& arr, const LinkBudget& lb, std::size_t pt) {
  const int serving = grid.serving_beam[pt];
  const int ih = plan.index_of[serving];
  const auto& act = plan.active[ih];
  const std::vector<double> power = allocate_power(scheme, act, layout, arr, lb);
  const auto h = channel_row(grid.points[pt], layout.spec.orbit, arr, lb);
  double interference = 0.0, signal = 0.0;
  for (std::size_t j = 0; j < act.size(); ++j) {
    const Beam& b = layout.beams[act[j]];
    const BeamWeights w = tapered_weights(arr, b.pointing.u, b.pointing.v, b.phi_deg,
                                          b.beta_x, b.beta_y, power[j]);
    cplx acc(0.0, 0.0);
    for (int n = 0; n < arr.n_elements(); ++n) acc += h[n] * w.w[n];
    const double rx = std::norm(acc);
    if (act[j] == serving)
      signal = rx;
    else
      interference += rx;
  }
  return signal / (interference + lb.noise_power_w());
}

}  // namespace

TEST_CASE("link budget scalars") {
  const LinkBudget lb;
  // FSPL at nadir, 20 GHz
  const double fspl_db = 10.0 * std::log10(fspl_linear(1300e3, kSpeedOfLight / 20e9));
  CHECK(fspl_db == doctest::Approx(180.7).epsilon(0.1 / 180.7));
  // noise floor k*B
  CHECK(10.0 * std::log10(lb.noise_power_w()) == doctest::Approx(-145.6).epsilon(0.05 / 145.6));
  LinkBudget wide = lb;
  wide.bandwidth_hz *= 2.0;
  CHECK(10.0 * std::log10(wide.noise_power_w() / lb.noise_power_w()) ==
        doctest::Approx(3.0103).epsilon(1e-4));
  // table interpolation: exact rows and the midpoint
  CHECK(interp_table(lb.atmospheric_loss_db, 45.0) == doctest::Approx(0.71));
  CHECK(interp_table(lb.g_over_t_dbk, 45.0) == doctest::Approx(10.0));
  CHECK(interp_table(lb.atmospheric_loss_db, 37.5) == doctest::Approx(0.905));
  // clamped outside
  CHECK(interp_table(lb.atmospheric_loss_db, 10.0) == doctest::Approx(1.1));
  CHECK(interp_table(lb.g_over_t_dbk, 95.0) == doctest::Approx(11.0));
}

TEST_CASE("nadir single-beam SNR") {
  // lone full-power nadir beam: EIRP - FSPL - L_at + G/T + 228.6 - 10log10(B)
  const ArrayGeometry arr = kCfg.build_reference_array();
  const LinkBudget lb;
  const OrbitGeometry geo;
  const BeamLayout lay = build_layout(named_design("B", kCfg));
  int nadir_id = 0;
  for (const auto& b : lay.beams)
    if (std::hypot(b.center.x_km, b.center.y_km) < 1e-6) nadir_id = b.id;
  const auto h = channel_row({0.0, 0.0}, geo, arr, lb);
  const BeamWeights w = phased_weights(arr, 0.0, 0.0, arr.total_power_w());
  cplx acc(0.0, 0.0);
  for (int n = 0; n < arr.n_elements(); ++n) acc += h[n] * w.w[n];
  const double snr_db = 10.0 * std::log10(std::norm(acc) / lb.noise_power_w());
  CHECK(snr_db == doctest::Approx(22.4).epsilon(0.5 / 22.4));
  CHECK(nadir_id >= 0);
}

TEST_CASE("sensing grid") {
  const BeamLayout lay = build_layout(named_design("D3", kCfg));
  const SensingGrid grid = build_sensing_grid(lay, 15.0);
  // around 32k points at 15 km spacing
  CHECK(grid.points.size() > 25000);
  CHECK(grid.points.size() < 40000);
  // all points within the footprint-reachable tilt
  const double lim = ground_arc_from_tilt(effective_max_tilt(kCfg.orbit, 3.64), kCfg.orbit);
  for (const auto& p : grid.points) CHECK(std::hypot(p.x_km, p.y_km) <= lim + 1e-6);
  // nearest-center assignment
  for (std::size_t i = 0; i < grid.points.size(); i += 997) {
    const int a = grid.serving_beam[i];
    double da = 1e18;
    for (const auto& b : lay.beams) {
      const double d = std::hypot(grid.points[i].x_km - b.center.x_km,
                                  grid.points[i].y_km - b.center.y_km);
      if (b.id == a) da = d;
    }
    for (const auto& b : lay.beams) {
      const double d = std::hypot(grid.points[i].x_km - b.center.x_km,
                                  grid.points[i].y_km - b.center.y_km);
      CHECK(d >= da - 1e-9);
    }
  }
}

TEST_CASE("power allocation") {
  const ArrayGeometry arr = kCfg.build_reference_array();
  const LinkBudget lb;
  const BeamLayout lay = build_layout(named_design("D3", kCfg));
  const double total = arr.total_power_w();

  // single beam gets everything
  for (PowerScheme s : {PowerScheme::Equal, PowerScheme::SnrEqualizing}) {
    const auto p = allocate_power(s, {0}, lay, arr, lb);
    CHECK(p.size() == 1);
    CHECK(p[0] == doctest::Approx(total).epsilon(1e-12));
  }
  // equal split
  std::vector<int> eight{0, 1, 2, 3, 4, 5, 6, 7};
  const auto pe = allocate_power(PowerScheme::Equal, eight, lay, arr, lb);
  for (double p : pe) CHECK(p == doctest::Approx(total / 8.0).epsilon(1e-12));

  // conservation and center-power equality for the equalizing scheme
  const HopPlan plan = assign_hop_indices(lay.beams, 62);
  for (int ih : {0, 17, 45}) {
    const auto& act = plan.active[ih];
    const auto p = allocate_power(PowerScheme::SnrEqualizing, act, lay, arr, lb);
    double sum = 0.0;
    for (double v : p) sum += v;
    CHECK(sum == doctest::Approx(total).epsilon(1e-12));
    // P_k * |hc_k w_k|^2 constant across the active set
    std::vector<double> rx(act.size());
    for (std::size_t k = 0; k < act.size(); ++k) {
      const Beam& b = lay.beams[act[k]];
      const auto h = channel_row(b.center, kCfg.orbit, arr, lb);
      const BeamWeights w = tapered_weights(arr, b.pointing.u, b.pointing.v, b.phi_deg,
                                            b.beta_x, b.beta_y, p[k]);
      cplx acc(0.0, 0.0);
      for (int n = 0; n < arr.n_elements(); ++n) acc += h[n] * w.w[n];
      rx[k] = std::norm(acc);
    }
    for (std::size_t k = 1; k < act.size(); ++k)
      CHECK(rx[k] == doctest::Approx(rx[0]).epsilon(1e-9));
  }
  CHECK_THROWS_AS(allocate_power(PowerScheme::Equal, {}, lay, arr, lb),
                  std::invalid_argument);
}

TEST_CASE("evaluate_sinr equals the brute-force oracle") {
  // tiny instance: 4-element array, 3 beams, 10 sensing points
  ExperimentConfig cfg;
  cfg.array.n_elements = 4;
  const ArrayGeometry arr = cfg.build_reference_array();
  const LinkBudget lb;

  BeamLayout lay;
  lay.spec = named_design("B", cfg);
  lay.d_g_km = 300.0;
  for (int k = 0; k < 3; ++k) {
    Beam b;
    b.id = k;
    b.center = {k * 300.0 - 300.0, 100.0 * k};
    b.row = 0;
    b.col = k;
    b.pointing = pointing_of(b.center, cfg.orbit);
    b.phi_deg = 0.0;
    lay.beams.push_back(b);
  }
  const HopPlan plan = assign_hop_indices(lay.beams, 2);

  SensingGrid grid;
  for (int i = 0; i < 10; ++i) grid.points.push_back({i * 120.0 - 540.0, 40.0 * (i % 3)});
  grid.serving_beam.resize(10);
  for (int i = 0; i < 10; ++i) {
    double best = 1e18;
    for (const auto& b : lay.beams) {
      const double d = std::hypot(grid.points[i].x_km - b.center.x_km,
                                  grid.points[i].y_km - b.center.y_km);
      if (d < best) {
        best = d;
        grid.serving_beam[i] = b.id;
      }
    }
  }

  for (PowerScheme s : {PowerScheme::Equal, PowerScheme::SnrEqualizing}) {
    const SinrMap map = evaluate_sinr(lay, plan, grid, s, arr, lb, 1);
    for (std::size_t i = 0; i < grid.points.size(); ++i) {
      const double ref = oracle_sinr(lay, plan, grid, s, arr, lb, i);
      CHECK(map.sinr[i] == doctest::Approx(ref).epsilon(1e-12));
      // interference positivity: SINR <= SNR of the serving link
      CHECK(map.sinr[i] <= ref * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("two-beam closed form") {
  // two isotropic elements, two far-separated beams, equal power: the SINR at
  // a beam center follows from the 2-element array factor directly
  ExperimentConfig cfg;
  cfg.array.n_elements = 2;
  cfg.array.element_gain_dbi = 0.0;
  ArrayGeometry arr = cfg.build_reference_array();
  arr.element_boresight_gain_dbi = 0.0;
  const LinkBudget lb;

  BeamLayout lay;
  lay.spec = named_design("B", cfg);
  for (int k = 0; k < 2; ++k) {
    Beam b;
    b.id = k;
    b.center = {k == 0 ? -600.0 : 600.0, 0.0};
    b.row = 0;
    b.col = k;
    b.pointing = pointing_of(b.center, cfg.orbit);
    lay.beams.push_back(b);
  }
  const HopPlan plan = assign_hop_indices(lay.beams, 1);
  SensingGrid grid;
  grid.points = {lay.beams[0].center};
  grid.serving_beam = {0};
  const SinrMap map = evaluate_sinr(lay, plan, grid, PowerScheme::Equal, arr, lb, 1);

  // closed form: P/2 per beam, unit-norm steering, amplitude from the budget
  const ChannelGain g = channel_gain(lay.beams[0].center, cfg.orbit, arr, lb);
  const double pk = arr.total_power_w() / 2.0;
  const double k0 = 2.0 * kPi / arr.wavelength_m;
  const double a2 = g.amplitude * g.amplitude;
  const double sig = a2 * pk * 2.0;  // coherent: (sqrt(P/2/2)*2)^2 = P
  const double du = lay.beams[1].pointing.u - g.u;
  // two elements at +-s/2 along x after re-centering
  const double s = arr.x_m[1] - arr.x_m[0];
  const double intf = a2 * pk * 0.5 * std::norm(cplx(1.0, 0.0) + std::exp(cplx(0.0, -k0 * s * du)));
  const double expect = sig / (intf + lb.noise_power_w());
  CHECK(map.sinr[0] == doctest::Approx(expect).epsilon(1e-9));
}

TEST_CASE("percentile") {
  SinrMap m;
  m.sinr = {1.0, 1.0, 1.0};
  CHECK(percentile_db(m, 0.5) == doctest::Approx(0.0).epsilon(1e-12));
  SinrMap two;
  two.sinr = {1.0, 10.0};  // 0 dB and 10 dB
  CHECK(percentile_db(two, 0.5) == doctest::Approx(5.0).epsilon(1e-12));
  CHECK_THROWS_AS(percentile_db(SinrMap{}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(percentile_db(two, 0.0), std::invalid_argument);
}

TEST_CASE("default schemes") {
  CHECK(default_scheme(named_design("B", kCfg)) == PowerScheme::SnrEqualizing);
  CHECK(default_scheme(named_design("C1", kCfg)) == PowerScheme::SnrEqualizing);
  CHECK(default_scheme(named_design("C2", kCfg)) == PowerScheme::SnrEqualizing);
  CHECK(default_scheme(named_design("D1", kCfg)) == PowerScheme::SnrEqualizing);
  CHECK(default_scheme(named_design("D2", kCfg)) == PowerScheme::Equal);
  CHECK(default_scheme(named_design("A", kCfg)) == PowerScheme::Equal);
}

TEST_CASE("determinism across thread counts") {
  const ArrayGeometry arr = kCfg.build_reference_array();
  const LinkBudget lb;
  const BeamLayout lay = build_layout(named_design("D3", kCfg));
  const SensingGrid grid = build_sensing_grid(lay, 60.0);  // smoke-scale grid
  const HopPlan plan = assign_hop_indices(lay.beams, 62);
  const SinrMap a = evaluate_sinr(lay, plan, grid, PowerScheme::Equal, arr, lb, 1);
  const SinrMap b = evaluate_sinr(lay, plan, grid, PowerScheme::Equal, arr, lb, 8);
  for (std::size_t i = 0; i < a.sinr.size(); ++i) CHECK(a.sinr[i] == b.sinr[i]);
}
