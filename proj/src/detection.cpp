#include "soamzi/detection.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>
#include <string>

#include "soamzi/fft.hpp"
#include "soamzi/units.hpp"

namespace soamzi {

double OBPFParams::bandwidth_hz() const {
  const double lambda_m = center_nm * 1e-9;
  return kSpeedOfLight * (bandwidth_nm * 1e-9) / (lambda_m * lambda_m);
}

OpticalEnvelope obpf(const OpticalEnvelope& e, const OBPFParams& params) {
  if (std::abs(e.carrier_nm - params.center_nm) > 5.0 * params.bandwidth_nm)
    return zero_envelope(e.grid, e.carrier_nm);

  const double bw = params.bandwidth_hz();
  // offset of the envelope's carrier from the filter center, in Hz
  const double carrier_offset =
      kSpeedOfLight / (e.carrier_nm * 1e-9) - kSpeedOfLight / (params.center_nm * 1e-9);

  auto spectrum = fft(e.samples);
  const std::size_t n = spectrum.size();
  const double df = e.grid.bin_spacing();
  for (std::size_t k = 0; k < n; ++k) {
    // signed baseband frequency of bin k
    const double f_base =
        (k <= n / 2 ? static_cast<double>(k) : static_cast<double>(k) - static_cast<double>(n)) *
        df;
    const double f = carrier_offset + f_base;
    const double mag = std::exp(-2.0 * M_LN2 * (f / bw) * (f / bw));
    spectrum[k] *= mag;
  }
  OpticalEnvelope out = e;
  out.samples = ifft(spectrum);
  return out;
}

OpticalEnvelope apply_loss(const OpticalEnvelope& e, double loss_db) {
  if (loss_db < 0.0) throw std::invalid_argument("loss must be >= 0 dB");
  OpticalEnvelope out = e;
  const double s = db_to_field_ratio(-loss_db);  // 10^(-loss/20)
  for (auto& v : out.samples) v *= s;
  return out;
}

ElectricalWaveform photodetect(const OpticalEnvelope& e, const PhotodiodeParams& pd) {
  ElectricalWaveform w;
  w.grid = e.grid;
  w.samples.resize(e.grid.n_samples);
  for (std::size_t i = 0; i < e.grid.n_samples; ++i)
    w.samples[i] = pd.responsivity * e.power_at(i);
  return w;
}

std::size_t RFSpectrum::bin_index(double freq_hz) const {
  const double k_real = freq_hz / bin_hz;
  const double k_round = std::round(k_real);
  if (std::abs(k_real - k_round) > 1e-6)
    throw std::invalid_argument("frequency " + std::to_string(freq_hz) +
                                " Hz is not on the spectrum bin grid (spacing " +
                                std::to_string(bin_hz) + " Hz)");
  if (k_round < 0.0 || k_round >= static_cast<double>(power_dbm.size()))
    throw std::invalid_argument("frequency " + std::to_string(freq_hz) +
                                " Hz is outside the one-sided spectrum");
  return static_cast<std::size_t>(k_round);
}

double RFSpectrum::power_at(double freq_hz) const { return power_dbm[bin_index(freq_hz)]; }

double RFSpectrum::linear_at(double freq_hz) const {
  const double dbm = power_dbm[bin_index(freq_hz)];
  return dbm <= kFloorDbm ? 0.0 : dbm_to_watt(dbm);
}

RFSpectrum rf_spectrum(const ElectricalWaveform& w, double load_ohm) {
  const std::size_t n = w.samples.size();
  auto x = fft_real(w.samples);

  RFSpectrum s;
  s.bin_hz = w.grid.bin_spacing();
  s.load_ohm = load_ohm;
  double acc = 0.0;
  for (double v : w.samples) acc += v * v;
  s.total_power_w = acc / static_cast<double>(n) * load_ohm;
  s.power_dbm.resize(n / 2 + 1);
  const double inv_n = 1.0 / static_cast<double>(n);
  for (std::size_t k = 0; k <= n / 2; ++k) {
    const bool single = (k == 0 || k == n / 2);  // DC and Nyquist have no pair
    const double amp = (single ? 1.0 : 2.0) * std::abs(x[k]) * inv_n;
    const double p = amp * amp * load_ohm * (single ? 1.0 : 0.5);
    s.power_dbm[k] = watt_to_dbm(p);
  }
  return s;
}

RFSpectrum rf_spectrum(const ElectricalWaveform& w, const PhotodiodeParams& pd) {
  return rf_spectrum(w, pd.load_ohm);
}

double electrical_input_power(const OpticalEnvelope& probe_source,
                              const PhotodiodeParams& pd, double f_if) {
  return rf_spectrum(photodetect(probe_source, pd), pd.load_ohm).power_at(f_if);
}

void write_spectrum_csv(const RFSpectrum& s, const std::string& path,
                        double max_freq_hz) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path + " for writing");
  out << "freq_hz,power_dbm\n";
  char line[80];
  for (std::size_t k = 0; k < s.power_dbm.size(); ++k) {
    const double f = static_cast<double>(k) * s.bin_hz;
    if (f > max_freq_hz) break;
    std::snprintf(line, sizeof(line), "%.10g,%.4f\n", f, s.power_dbm[k]);
    out << line;
  }
}

}  // namespace soamzi
