#pragma once

#include <string>
#include <vector>

#include "soamzi/config.hpp"
#include "soamzi/mzi.hpp"
#include "soamzi/soa.hpp"

namespace soamzi {

/// Static port-J response vs pump power at port A (Fig. 6 analogue).
struct StaticCurve {
  std::vector<double> p_a_dbm;      // input power at port A
  std::vector<double> p_j_mw;       // static port-J output power
  std::vector<double> derivative;   // smoothed dP_J/dP_A, linear W/W
};

struct QuasiLinearRegion {
  double lo_dbm = 0.0;
  double hi_dbm = 0.0;
  double center_dbm = 0.0;
};

/// CW pump-probe static sweep: for each port-A power, solve the arm fixed
/// points (probe split 50/50, pump wholly in the upper SOA), form the static
/// port-J power through the interferometer transfer, and differentiate on
/// linear power (central differences, 7-point smoothing).
/// Requires a sorted grid of at least 15 points.
StaticCurve static_characterization(const SOAParams& soa_up, const SOAParams& soa_low,
                                    double bias_phase, double probe_power,
                                    const std::vector<double>& p_a_grid_dbm);

/// Assembles a StaticCurve from raw samples: derivative by central
/// differences on linear power (one-sided at the ends), then 7-point
/// smoothing. Shared by static_characterization and synthetic-curve tests.
StaticCurve finish_static_curve(std::vector<double> p_a_dbm, std::vector<double> p_j_mw);

/// Centered 7-point moving average; shrinking symmetric windows at the edges
/// (radius min(3, i, n-1-i)). Requires length >= 7.
std::vector<double> smooth_ma7(const std::vector<double>& y);

/// Longest contiguous span where (max-min)/mean of the smoothed derivative
/// <= tolerance and the span's mean derivative exceeds 10% of the global
/// max; ties broken toward the span with larger mean derivative. Center is
/// the dBm midpoint. Throws if no span qualifies (suggesting a wider grid).
QuasiLinearRegion quasi_linear_region(const StaticCurve& c, double tolerance = 0.20);

/// Everything needed to run one mixer cell outside the scenario driver; the
/// calibration sweeps construct these per grid point.
struct Hd2SweepPoint {
  double p_a_dbm = 0.0;
  double m = 0.0;        // modulation depth solved for constant P_e,in
  double hd2_db = 0.0;
  bool feasible = true;  // false when the required m exceeds 1
};

struct Hd2SweepResult {
  std::vector<Hd2SweepPoint> curve;
  double best_p_a_dbm = 0.0;  // grid argmin of HD2 over feasible points
};

struct OdlTunePoint {
  double delay_s = 0.0;
  double spread_db = 0.0;       // max-min over the {10,20,30,40} GHz lines
  double line_10ghz_dbm = 0.0;  // used to exclude dark (degenerate) delays
  bool usable = true;
};

struct OdlTuneResult {
  std::vector<OdlTunePoint> curve;
  double best_delay_s = 0.0;
};

/// Fig. 7 analogue: sweep the Modulation-architecture port-A mean power over
/// cfg.hd2_p_a_grid_dbm while holding the detected f_if input tone at
/// p_e_in_dbm. The depth is re-solved per point (tone current R*m*P0 fixed,
/// so m = I_target/(R*P0)); points needing m > 1 are marked infeasible and
/// excluded from the argmin.
Hd2SweepResult hd2_power_sweep(const ScenarioConfig& cfg, double p_e_in_dbm = -60.0);

/// Sweeps the differential delay over cfg.odl_delay_steps multiples of
/// T_rep/steps with a CW probe, reads the {10,20,30,40} GHz comb lines at
/// port I, and returns the delay minimizing their max-min spread. Delays
/// whose 10 GHz line sits within 30 dB of the spectrum floor (dark output)
/// are excluded.
OdlTuneResult tune_odl(const ScenarioConfig& cfg);

/// Peak pulse power at which the XPM phase excursion reaches pi:
/// bisection on max_t |alpha (h_pump(t) - h_nopump)/2| = pi within 1e-3 rad.
/// Throws if pi is unreachable below power_cap (reporting the max shift).
double pi_shift_pump_power(const SOAParams& soa, double fwhm, double f_rep,
                           double probe_power, double power_cap = 1.0);

void write_static_curve_csv(const StaticCurve& c, const std::string& path);
void write_hd2_sweep_csv(const Hd2SweepResult& r, const std::string& path);
void write_odl_tune_csv(const OdlTuneResult& r, const std::string& path);

}  // namespace soamzi
