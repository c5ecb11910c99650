#pragma once

#include "soamzi/grid.hpp"

namespace soamzi {

/// Lumped (position-integrated) SOA rate-equation model with a single state,
/// the integrated log-gain h(t):
///
///   dh/dt = (h0 - h)/tau_c - (P_tot(t)/e_sat) * (e^h - 1)
///
/// Each co-propagating channel sees field gain exp((1 - j*alpha) h/2); the
/// linewidth enhancement factor alpha converts gain compression into a
/// cross-phase shift of -alpha*h/2.
struct SOAParams {
  double h0 = 0.0;     // unsaturated integrated log-gain, e^h0 = small-signal power gain
  double tau_c = 0.0;  // carrier lifetime, s
  double e_sat = 0.0;  // saturation energy, J
  double alpha = 0.0;  // linewidth enhancement factor

  void validate() const;
};

/// Log-gain trajectory over one converged periodic window.
struct SOATrace {
  TimeGrid grid;
  std::vector<double> h;

  double min() const;
  double max() const;
};

/// Static operating point: the unique root h in (0, h0] of
///   (h0 - h)/tau_c = (p_in/e_sat) (e^h - 1),
/// solved to a relative residual below 1e-12.
double steady_state_h(const SOAParams& params, double p_in);

struct PropagateResult {
  std::vector<OpticalEnvelope> outputs;
  SOATrace trace;
  int warmup_windows = 0;  // windows integrated before periodic steady state
};

/// Integrates the gain equation with total drive P_tot(t) = sum_i |E_i(t)|^2
/// (classical RK4 on the grid step, drive linearly interpolated at half
/// steps), repeating the periodic window until |h_start - h_end| <
/// 1e-9 * h0, then emits one converged window.
/// Throws ConvergenceError if the warm-up cap is exceeded.
PropagateResult propagate(const SOAParams& params,
                          const std::vector<OpticalEnvelope>& inputs,
                          int warmup_cap = 50);

}  // namespace soamzi
