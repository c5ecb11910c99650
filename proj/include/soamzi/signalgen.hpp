#pragma once

#include "soamzi/grid.hpp"

namespace soamzi {

/// Periodic train of Gaussian power-profile pulses, flat phase.
/// P(t) = Pp * sum_k exp(-4 ln2 (t - k/f_rep)^2 / fwhm^2), field sqrt(P).
/// Pp is chosen in closed form so the time-average power equals mean_power.
/// Pulses are summed over neighbor periods, so the periodic window has no
/// edge discontinuity.
/// Throws std::invalid_argument if the grid is too coarse (dt > fwhm/16).
OpticalEnvelope gaussian_pulse_train(const TimeGrid& grid, double fwhm,
                                     double mean_power, double carrier_nm);

/// Ideal intensity-modulated CW carrier: P(t) = mean_power (1 + m cos 2pi f_if t).
/// Depth m must lie in [0, 1]; over-modulation would make P(t) negative.
OpticalEnvelope mzm_modulated_cw(const TimeGrid& grid, double carrier_nm,
                                 double mean_power, double m, double f_if);

/// Constant-power carrier.
OpticalEnvelope cw(const TimeGrid& grid, double carrier_nm, double power);

/// Closed-form Fourier coefficient of the Gaussian pulse-train power profile:
/// c_n = mean_power * exp(-(pi n f_rep fwhm)^2 / (4 ln2)).
double pulse_train_comb_coefficient(double mean_power, double f_rep, double fwhm, int n);

}  // namespace soamzi
