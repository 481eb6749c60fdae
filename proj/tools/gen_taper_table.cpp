// SPDX-License-Identifier: Apache-2.0
//
// Regenerates include/leobh/taper_table.hpp: scans the taper strength over
// [0, 8] rad and records the measured outer -3 dB width of the nadir beam of
// the 512-element reference array.

#include <cstdio>

#include "leobh/array.hpp"

int main(int argc, char** argv) {
  using namespace leobh;
  const double lam = kSpeedOfLight / 20e9;
  const ArrayGeometry arr = build_array(512, 0.65 * lam, lam);
  const double step = 0.05, max_beta = 8.0;
  const int n = static_cast<int>(max_beta / step + 0.5) + 1;

  FILE* out = argc > 1 ? std::fopen(argv[1], "w") : stdout;
  if (!out) return 1;
  std::fprintf(out,
               "// SPDX-License-Identifier: Apache-2.0\n"
               "//\n"
               "// Quadratic-taper calibration table for the 512-element reference "
               "array:\n"
               "// measured outer -3 dB width of the nadir beam versus taper "
               "strength.\n"
               "// Generated by tools/gen_taper_table; regenerate after changing the\n"
               "// array model.\n"
               "\n"
               "#pragma once\n"
               "\n"
               "#include <array>\n"
               "\n"
               "namespace leobh {\n"
               "\n"
               "struct TaperEntry {\n"
               "  double beta_rad;\n"
               "  double width_deg;\n"
               "};\n"
               "\n"
               "inline constexpr std::array<TaperEntry, %d> kTaperTable = {{\n",
               n);
  for (int i = 0; i < n; ++i) {
    const double beta = i * step;
    const BeamWeights w = tapered_weights(arr, 0.0, 0.0, 0.0, beta, beta, 1.0);
    const double width = measure_beamwidth(arr, w, 0.0);
    std::fprintf(out, "    {%.2f, %.6f},\n", beta, width);
  }
  std::fprintf(out,
               "}};\n"
               "\n"
               "}  // namespace leobh\n");
  if (out != stdout) std::fclose(out);
  return 0;
}
