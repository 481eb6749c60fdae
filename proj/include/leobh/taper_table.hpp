// SPDX-License-Identifier: Apache-2.0
//
// Quadratic-taper calibration table for the 512-element reference array:
// measured outer -3 dB width of the nadir beam versus taper strength.
// Generated by tools/gen_taper_table; regenerate after changing the
// array model.

#pragma once

#include <array>

namespace leobh {

struct TaperEntry {
  double beta_rad;
  double width_deg;
};

inline constexpr std::array<TaperEntry, 161> kTaperTable = {{
    {0.00, 3.800000},
    {0.05, 3.800000},
    {0.10, 3.800000},
    {0.15, 3.800000},
    {0.20, 3.800000},
    {0.25, 3.800000},
    {0.30, 3.800000},
    {0.35, 3.800000},
    {0.40, 3.800000},
    {0.45, 3.800000},
    {0.50, 3.800000},
    {0.55, 3.800000},
    {0.60, 3.800000},
    {0.65, 3.800000},
    {0.70, 3.800000},
    {0.75, 3.800000},
    {0.80, 3.800000},
    {0.85, 3.800000},
    {0.90, 3.800000},
    {0.95, 3.800000},
    {1.00, 3.800000},
    {1.05, 3.800000},
    {1.10, 3.810000},
    {1.15, 3.820000},
    {1.20, 3.820000},
    {1.25, 3.820000},
    {1.30, 3.820000},
    {1.35, 3.820000},
    {1.40, 3.820000},
    {1.45, 3.820000},
    {1.50, 3.820000},
    {1.55, 3.820000},
    {1.60, 3.820000},
    {1.65, 3.820000},
    {1.70, 3.820000},
    {1.75, 3.830000},
    {1.80, 3.840000},
    {1.85, 3.840000},
    {1.90, 3.840000},
    {1.95, 3.840000},
    {2.00, 3.840000},
    {2.05, 3.840000},
    {2.10, 3.840000},
    {2.15, 3.850000},
    {2.20, 3.860000},
    {2.25, 3.860000},
    {2.30, 3.860000},
    {2.35, 3.860000},
    {2.40, 3.860000},
    {2.45, 3.870000},
    {2.50, 3.880000},
    {2.55, 3.880000},
    {2.60, 3.880000},
    {2.65, 3.880000},
    {2.70, 3.890000},
    {2.75, 3.900000},
    {2.80, 3.900000},
    {2.85, 3.910000},
    {2.90, 3.910000},
    {2.95, 3.920000},
    {3.00, 3.930000},
    {3.05, 3.930000},
    {3.10, 3.940000},
    {3.15, 3.950000},
    {3.20, 3.960000},
    {3.25, 3.970000},
    {3.30, 3.970000},
    {3.35, 3.990000},
    {3.40, 3.990000},
    {3.45, 4.010000},
    {3.50, 4.020000},
    {3.55, 4.030000},
    {3.60, 4.050000},
    {3.65, 4.070000},
    {3.70, 4.080000},
    {3.75, 4.100000},
    {3.80, 4.120000},
    {3.85, 4.140000},
    {3.90, 4.160000},
    {3.95, 4.190000},
    {4.00, 4.220000},
    {4.05, 4.260000},
    {4.10, 4.300000},
    {4.15, 4.340000},
    {4.20, 4.390000},
    {4.25, 4.450000},
    {4.30, 9.930000},
    {4.35, 10.450000},
    {4.40, 10.820000},
    {4.45, 11.130000},
    {4.50, 11.400000},
    {4.55, 11.660000},
    {4.60, 11.890000},
    {4.65, 12.130000},
    {4.70, 12.350000},
    {4.75, 12.580000},
    {4.80, 12.820000},
    {4.85, 13.060000},
    {4.90, 13.090000},
    {4.95, 13.100000},
    {5.00, 13.120000},
    {5.05, 13.160000},
    {5.10, 13.180000},
    {5.15, 13.210000},
    {5.20, 13.240000},
    {5.25, 13.270000},
    {5.30, 13.310000},
    {5.35, 13.350000},
    {5.40, 13.400000},
    {5.45, 13.460000},
    {5.50, 13.510000},
    {5.55, 13.590000},
    {5.60, 13.660000},
    {5.65, 13.760000},
    {5.70, 13.870000},
    {5.75, 14.010000},
    {5.80, 14.200000},
    {5.85, 14.500000},
    {5.90, 16.900000},
    {5.95, 17.670000},
    {6.00, 18.040000},
    {6.05, 18.330000},
    {6.10, 18.580000},
    {6.15, 18.800000},
    {6.20, 19.010000},
    {6.25, 19.190000},
    {6.30, 19.380000},
    {6.35, 19.560000},
    {6.40, 19.740000},
    {6.45, 19.910000},
    {6.50, 20.080000},
    {6.55, 20.260000},
    {6.60, 20.450000},
    {6.65, 20.630000},
    {6.70, 20.840000},
    {6.75, 21.050000},
    {6.80, 21.290000},
    {6.85, 21.550000},
    {6.90, 21.850000},
    {6.95, 22.160000},
    {7.00, 22.260000},
    {7.05, 22.380000},
    {7.10, 22.510000},
    {7.15, 22.660000},
    {7.20, 22.890000},
    {7.25, 24.030000},
    {7.30, 24.340000},
    {7.35, 24.560000},
    {7.40, 24.760000},
    {7.45, 24.930000},
    {7.50, 25.110000},
    {7.55, 25.270000},
    {7.60, 25.430000},
    {7.65, 25.580000},
    {7.70, 25.720000},
    {7.75, 25.860000},
    {7.80, 25.990000},
    {7.85, 26.110000},
    {7.90, 26.110000},
    {7.95, 25.840000},
    {8.00, 25.570000},
}};

}  // namespace leobh
