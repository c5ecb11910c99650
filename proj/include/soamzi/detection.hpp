#pragma once

#include <string>
#include <vector>

#include "soamzi/grid.hpp"

namespace soamzi {

/// Gaussian (order 1) optical bandpass filter, magnitude-only, unity gain at
/// center: |H(f)| = exp(-2 ln2 (f / bw_hz)^2) with f the offset from center
/// and bw_hz the 3-dB FULL width.
struct OBPFParams {
  double center_nm = 1557.4;
  double bandwidth_nm = 0.56;

  double bandwidth_hz() const;  // c * bw_nm / center_nm^2
};

struct PhotodiodeParams {
  double responsivity = 1.0;  // A/W
  double load_ohm = 50.0;
};

/// Applies the OBPF to an envelope. A carrier more than 5x the 3-dB
/// bandwidth away from the filter center is fully rejected (all-zero
/// output). In-band, the envelope spectrum is shaped by the Gaussian
/// magnitude centered on the carrier offset; zero phase.
OpticalEnvelope obpf(const OpticalEnvelope& e, const OBPFParams& params);

/// Scales power by -loss_db (field by 10^(-loss_db/20)).
OpticalEnvelope apply_loss(const OpticalEnvelope& e, double loss_db);

/// Ideal photodiode: i(t) = R * |E(t)|^2. No bandwidth limit, no noise.
ElectricalWaveform photodetect(const OpticalEnvelope& e, const PhotodiodeParams& pd);

/// One-sided electrical power spectrum of a current waveform.
///  - tone bin k in (0, N/2): amplitude I_k = 2|X_k|/N, power I_k^2 * load / 2;
///  - DC and Nyquist bins: I = |X_k|/N, power I^2 * load.
/// Powers are stored in dBm; exact zeros map to the -400 dBm floor marker.
/// Parseval: sum of linear bin powers = mean(i^2) * load within 1e-9 relative.
struct RFSpectrum {
  double bin_hz = 0.0;
  double load_ohm = 50.0;
  double total_power_w = 0.0;     // mean(i^2) * load, time-domain side of Parseval
  std::vector<double> power_dbm;  // size N/2 + 1, index k at k*bin_hz

  std::size_t bin_index(double freq_hz) const;  // throws if off-bin
  double power_at(double freq_hz) const;        // dBm
  double linear_at(double freq_hz) const;       // W
};

RFSpectrum rf_spectrum(const ElectricalWaveform& w, double load_ohm = 50.0);
RFSpectrum rf_spectrum(const ElectricalWaveform& w, const PhotodiodeParams& pd);

/// P_e,in,dat at f_if: photodetects the port-C source directly (no loss, no
/// OBPF) and reads the f_if bin, in dBm.
double electrical_input_power(const OpticalEnvelope& probe_source,
                              const PhotodiodeParams& pd, double f_if);

/// Writes "freq_hz,power_dbm" rows (header included) for all bins up to
/// max_freq_hz inclusive.
void write_spectrum_csv(const RFSpectrum& s, const std::string& path,
                        double max_freq_hz = 45e9);

}  // namespace soamzi
