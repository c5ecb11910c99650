#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace soamzi {

/// Commensurate sampling grid: the window spans an integer number of
/// periods of both the sampling-train repetition rate and the signal
/// frequency, so every tone of interest lands exactly on a DFT bin.
struct TimeGrid {
  std::size_t n_samples = 0;  // power of two
  double dt = 0.0;            // s
  double window = 0.0;        // s, == n_samples * dt
  double f_rep = 0.0;         // Hz, sampling-train repetition rate
  double f_if = 0.0;          // Hz, signal frequency

  double time_at(std::size_t i) const { return static_cast<double>(i) * dt; }
  double bin_spacing() const { return 1.0 / window; }

  bool operator==(const TimeGrid&) const = default;
};

/// Builds the smallest common-period window for f_rep and f_if.
/// Throws std::invalid_argument if the two frequencies have no small-denominator
/// rational ratio (non-commensurate) or n_samples is not a power of two.
TimeGrid make_time_grid(double f_rep, double f_if, std::size_t n_samples);

/// Complex baseband field samples on a grid; |E(t)|^2 is instantaneous
/// power in W. Tagged with the optical carrier wavelength.
struct OpticalEnvelope {
  TimeGrid grid;
  std::vector<std::complex<double>> samples;  // sqrt(W)
  double carrier_nm = 0.0;

  double power_at(std::size_t i) const { return std::norm(samples[i]); }
  double mean_power() const;
  bool is_zero() const;
};

/// Real photocurrent samples on a grid (A).
struct ElectricalWaveform {
  TimeGrid grid;
  std::vector<double> samples;

  double mean() const;
  double max() const;
};

OpticalEnvelope zero_envelope(const TimeGrid& grid, double carrier_nm);

}  // namespace soamzi
