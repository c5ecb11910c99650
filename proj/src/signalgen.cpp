#include "soamzi/signalgen.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace soamzi {

OpticalEnvelope gaussian_pulse_train(const TimeGrid& grid, double fwhm,
                                     double mean_power, double carrier_nm) {
  if (!(fwhm > 0.0)) throw std::invalid_argument("pulse fwhm must be positive");
  if (mean_power < 0.0) throw std::invalid_argument("mean power must be >= 0");
  if (grid.dt > fwhm / 16.0)
    throw std::invalid_argument(
        "grid too coarse for fwhm = " + std::to_string(fwhm * 1e12) +
        " ps pulses: need dt <= fwhm/16, have dt = " + std::to_string(grid.dt * 1e12) +
        " ps");

  const double t_rep = 1.0 / grid.f_rep;
  // closed-form normalization: integral of one Gaussian power pulse is
  // Pp * fwhm * sqrt(pi / (4 ln2)); mean over T_rep fixes Pp.
  const double pp = mean_power * t_rep / (fwhm * std::sqrt(M_PI / (4.0 * M_LN2)));
  const double decay = 4.0 * M_LN2 / (fwhm * fwhm);

  // Sum enough neighbor periods that truncated tails sit below 1e-300.
  const int span = static_cast<int>(std::ceil(fwhm * 16.0 / t_rep)) + 1;

  // The window holds an integer number of repetition periods, so summing the
  // infinite train's neighbors of each sample (indices may run past the
  // window) yields the exact periodic extension with no edge discontinuity.
  OpticalEnvelope e = zero_envelope(grid, carrier_nm);
  for (std::size_t i = 0; i < grid.n_samples; ++i) {
    const double t = grid.time_at(i);
    const int k0 = static_cast<int>(std::lround(t * grid.f_rep));
    double p = 0.0;
    for (int k = k0 - span; k <= k0 + span; ++k) {
      const double d = t - static_cast<double>(k) * t_rep;
      p += std::exp(-decay * d * d);
    }
    e.samples[i] = std::sqrt(pp * p);
  }

  // renormalize the tiny discretization error so mean power is exact
  const double mp = e.mean_power();
  if (mp > 0.0) {
    const double scale = std::sqrt(mean_power / mp);
    for (auto& s : e.samples) s *= scale;
  }
  return e;
}

OpticalEnvelope mzm_modulated_cw(const TimeGrid& grid, double carrier_nm,
                                 double mean_power, double m, double f_if) {
  if (m < 0.0 || m > 1.0)
    throw std::invalid_argument("modulation depth m = " + std::to_string(m) +
                                " outside [0, 1]");
  if (mean_power < 0.0) throw std::invalid_argument("mean power must be >= 0");

  OpticalEnvelope e = zero_envelope(grid, carrier_nm);
  const double w = 2.0 * M_PI * f_if;
  for (std::size_t i = 0; i < grid.n_samples; ++i) {
    const double p = mean_power * (1.0 + m * std::cos(w * grid.time_at(i)));
    e.samples[i] = std::sqrt(p < 0.0 ? 0.0 : p);
  }
  return e;
}

OpticalEnvelope cw(const TimeGrid& grid, double carrier_nm, double power) {
  if (power < 0.0) throw std::invalid_argument("power must be >= 0");
  OpticalEnvelope e = zero_envelope(grid, carrier_nm);
  const double f = std::sqrt(power);
  for (auto& s : e.samples) s = f;
  return e;
}

double pulse_train_comb_coefficient(double mean_power, double f_rep, double fwhm,
                                    int n) {
  const double x = M_PI * static_cast<double>(n) * f_rep * fwhm;
  return mean_power * std::exp(-x * x / (4.0 * M_LN2));
}

}  // namespace soamzi
