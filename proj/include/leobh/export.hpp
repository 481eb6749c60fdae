// SPDX-License-Identifier: Apache-2.0
//
// Deterministic artifact writers: CSV with fixed 9-significant-digit
// scientific formatting and JSON summaries without timestamps, so identical
// configs reproduce byte-identical files.

#pragma once

#include <string>

#include "leobh/config.hpp"

namespace leobh {

std::string format_sci(double v);

std::string layout_csv(const BeamLayout& layout);
std::string hop_map_csv(const BeamLayout& layout, const HopPlan& plan);
std::string sinr_map_csv(const BeamLayout& layout, const SensingGrid& grid,
                         const SinrMap& map);
std::string cdf_csv(const SinrMap& map);
std::string schedule_csv(const ScheduleResult& result);

void write_file(const std::string& path, const std::string& content);

}  // namespace leobh
