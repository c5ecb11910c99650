#pragma once

#include <cmath>
#include <limits>

namespace soamzi {

inline constexpr double kSpeedOfLight = 299792458.0;  // m/s

// Spectral bins with no content are reported at this marker instead of -inf.
inline constexpr double kFloorDbm = -400.0;

inline double dbm_to_watt(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }

inline double watt_to_dbm(double w) {
  if (!(w > 0.0)) return kFloorDbm;
  double dbm = 10.0 * std::log10(w / 1e-3);
  return dbm < kFloorDbm ? kFloorDbm : dbm;
}

inline double db_to_power_ratio(double db) { return std::pow(10.0, db / 10.0); }
inline double db_to_field_ratio(double db) { return std::pow(10.0, db / 20.0); }

}  // namespace soamzi
