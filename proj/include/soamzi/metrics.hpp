#pragma once

#include <string>
#include <vector>

#include "soamzi/detection.hpp"
#include "soamzi/grid.hpp"

namespace soamzi {

/// MI = (max - mean) / mean of a nonnegative waveform (optical power or
/// photocurrent). Equals the modulation depth m for an ideal raised cosine.
double modulation_index(const std::vector<double>& samples);
double modulation_index(const ElectricalWaveform& w);

/// Frequencies of the mixing products around the pulse repetition rate.
struct Sideband {
  double lower_1 = 0.0;  // f_rep - f_if  (wanted up-converted tone)
  double lower_2 = 0.0;  // f_rep - 2 f_if
  double lower_3 = 0.0;  // f_rep - 3 f_if
  double upper_1 = 0.0;  // f_rep + f_if
  double upper_2 = 0.0;  // f_rep + 2 f_if
  double upper_3 = 0.0;  // f_rep + 3 f_if
};

Sideband sidebands(double f_rep, double f_if);

/// Conversion gain in dB: output tone power at f_rep - f_if minus the input
/// data tone power at f_if (both dBm).
double conversion_gain_db(const RFSpectrum& out, double p_in_dbm, double f_rep,
                          double f_if);

/// Harmonic distortion ratios, dB relative to the wanted tone at f_rep - f_if.
double hd2_db(const RFSpectrum& out, double f_rep, double f_if);
double hd3_db(const RFSpectrum& out, double f_rep, double f_if);

/// THD = 10 log10((P2 + P3) / P1) with the powers in linear watts; equals the
/// linear sum of the HD2/HD3 ratios: 10 log10(10^(hd2/10) + 10^(hd3/10)).
double thd_db(const RFSpectrum& out, double f_rep, double f_if);

/// Upper-sideband counterparts (f_rep + k f_if); computed for inspection,
/// not used by the comparison report.
double hd2_upper_db(const RFSpectrum& out, double f_rep, double f_if);
double hd3_upper_db(const RFSpectrum& out, double f_rep, double f_if);
double thd_upper_db(const RFSpectrum& out, double f_rep, double f_if);

/// One row of the architecture-comparison report.
struct MixerReport {
  std::string arch;
  double mi = 0.0;
  double p_in_dbm = 0.0;
  double p_out_dbm = 0.0;
  double gc_db = 0.0;
  double hd2_db = 0.0;
  double hd3_db = 0.0;
  double thd_db = 0.0;
  bool feasible = true;
  std::string note;  // failure reason for infeasible cells (summary only)
};

/// CSV with header "arch,mi,p_in_dbm,p_out_dbm,gc_db,hd2_db,hd3_db,thd_db".
/// Infeasible rows carry "nan" in the numeric columns after mi.
void write_reports_csv(const std::vector<MixerReport>& rows, const std::string& path);

}  // namespace soamzi
