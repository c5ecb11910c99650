#pragma once

#include <string>
#include <vector>

#include "soamzi/calibration.hpp"
#include "soamzi/config.hpp"
#include "soamzi/detection.hpp"
#include "soamzi/metrics.hpp"

namespace soamzi {

/// One (architecture, mi) cell: its report row plus the emitted spectrum.
struct CellResult {
  MixerReport report;
  RFSpectrum spectrum;
};

/// Cross-architecture trends derived from the reports of one run.
struct ComparisonSummary {
  std::vector<double> mi;
  std::vector<double> gain_gap_db;  // switching-standard minus modulation
  std::vector<double> thd_gap_db;   // switching-standard minus modulation
  bool switching_gain_increases_with_mi = false;
  bool thd_increases_with_mi = false;
  bool switching_gain_above_modulation = false;

  std::string to_text() const;
};

ComparisonSummary summarize(const std::vector<MixerReport>& reports);

/// Full comparison run: for each (arch, mi) in deterministic order (arch
/// order as configured, mi ascending) synthesize the sources, calibrate the
/// dark-port bias, run the mixer, detect port I through loss + OBPF, and
/// compute the metrics. A failing cell is recorded as infeasible with its
/// reason; the run continues. Cells execute on a worker pool; results land
/// in preassigned slots so the output never depends on scheduling.
std::vector<CellResult> run_cells(const ScenarioConfig& cfg,
                                  unsigned workers = 0);  // 0 = hardware

std::vector<MixerReport> run_scenario(const ScenarioConfig& cfg,
                                      unsigned workers = 0);

/// Closed-form spectrum of an ideal sampling mixer: photocurrent
/// i(t) = R g(t) (1 + m cos 2 pi f_if t) with g a Gaussian pulse train of
/// the given mean power. Comb line n f_rep has current amplitude 2 R c_n
/// (n >= 1), DC = R c_0; sidebands n f_rep +- f_if carry R m |c_n| (the
/// f_if line itself is the n = 0 sideband, amplitude R m c_0);
/// c_n = mean_power exp(-(pi n f_rep fwhm)^2 / (4 ln2)).
RFSpectrum ideal_sampler_oracle(double fwhm, double f_rep, double f_if, double m,
                                double mean_power, const PhotodiodeParams& pd,
                                const TimeGrid& grid);

/// Verification mode: replaces the SOA-MZI with ideal multiplication of the
/// modulated data power by the normalized pulse-train transmission, then
/// runs the real detection path. Must match ideal_sampler_oracle within
/// 0.1 dB on every bin above -120 dBm; mismatch throws OracleGateError
/// naming the worst bin.
RFSpectrum linearized_mode_run(const ScenarioConfig& cfg, double m = 0.8);

/// Runs the oracle gate (linearized_mode_run vs ideal_sampler_oracle) and
/// returns the worst absolute deviation in dB over the gated bins.
double oracle_gate(const ScenarioConfig& cfg);

/// Writes reports.csv, spectra/<arch>_<mi>.csv, summary.txt and the four
/// figure SVGs (fig6_static.svg, fig7_hd2.svg, fig8_gain.svg, fig9_thd.svg)
/// under out_dir. Static/HD2 calibration curves are computed here when the
/// report list is non-empty. Returns the list of files written.
std::vector<std::string> emit_outputs(const ScenarioConfig& cfg,
                                      const std::vector<CellResult>& cells,
                                      const std::string& out_dir);

}  // namespace soamzi
