// SPDX-License-Identifier: Apache-2.0

#include "leobh/export.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

namespace leobh {

std::string format_sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.8e", v);
  return buf;
}

std::string layout_csv(const BeamLayout& layout) {
  std::string out = "beam_id,lat,lon,theta_deg,phi_deg,wx_deg,wy_deg,br_km\n";
  for (const auto& b : layout.beams) {
    out += std::to_string(b.id) + ',' + format_sci(b.ground.lat_deg) + ',' +
           format_sci(b.ground.lon_deg) + ',' + format_sci(b.pointing.tilt_deg) + ',' +
           format_sci(b.phi_deg) + ',' + format_sci(b.w_x_deg) + ',' +
           format_sci(b.w_y_deg) + ',' + format_sci(b.br_km) + '\n';
  }
  return out;
}

std::string hop_map_csv(const BeamLayout& layout, const HopPlan& plan) {
  std::string out = "beam_id,row,col,ih\n";
  for (const auto& b : layout.beams)
    out += std::to_string(b.id) + ',' + std::to_string(b.row) + ',' +
           std::to_string(b.col) + ',' + std::to_string(plan.index_of[b.id]) + '\n';
  return out;
}

std::string sinr_map_csv(const BeamLayout& layout, const SensingGrid& grid,
                         const SinrMap& map) {
  std::string out = "lat,lon,beam_id,ih,sinr_db\n";
  for (std::size_t i = 0; i < grid.points.size(); ++i) {
    const GroundPoint g =
        tangent_to_ground(layout.sat_nadir, grid.points[i], layout.spec.orbit);
    out += format_sci(g.lat_deg) + ',' + format_sci(g.lon_deg) + ',' +
           std::to_string(map.serving_beam[i]) + ',' +
           std::to_string(map.hop_of_point[i]) + ',' +
           format_sci(10.0 * std::log10(map.sinr[i])) + '\n';
  }
  return out;
}

std::string cdf_csv(const SinrMap& map) {
  std::vector<double> v = map.sinr;
  std::sort(v.begin(), v.end());
  std::string out = "sinr_db,cdf\n";
  for (std::size_t i = 0; i < v.size(); ++i)
    out += format_sci(10.0 * std::log10(v[i])) + ',' +
           format_sci(static_cast<double>(i + 1) / v.size()) + '\n';
  return out;
}

std::string schedule_csv(const ScheduleResult& result) {
  std::string out = "slot,symbol0,nsym,prb0,nprb,signal,ih,ssbi,ue\n";
  for (const auto& a : result.allocations)
    out += std::to_string(a.slot) + ',' + std::to_string(a.start_symbol) + ',' +
           std::to_string(a.n_symbols) + ',' + std::to_string(a.start_prb) + ',' +
           std::to_string(a.n_prbs) + ',' + to_string(a.signal) + ',' +
           std::to_string(a.hop) + ',' + std::to_string(a.ssb_index) + ',' +
           std::to_string(a.ue) + '\n';
  return out;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << content;
}

}  // namespace leobh
