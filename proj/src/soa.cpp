#include "soamzi/soa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "soamzi/errors.hpp"

namespace soamzi {

void SOAParams::validate() const {
  if (!(h0 > 0.0)) throw ConfigError("SOA h0 must be positive");
  if (!(tau_c > 0.0)) throw ConfigError("SOA tau_c must be positive");
  if (!(e_sat > 0.0)) throw ConfigError("SOA e_sat must be positive");
  if (alpha < 0.0) throw ConfigError("SOA alpha must be >= 0");
}

double SOATrace::min() const { return *std::min_element(h.begin(), h.end()); }
double SOATrace::max() const { return *std::max_element(h.begin(), h.end()); }

double steady_state_h(const SOAParams& params, double p_in) {
  params.validate();
  if (p_in < 0.0) throw std::invalid_argument("input power must be >= 0");
  if (p_in == 0.0) return params.h0;

  // f(h) = (h0 - h)/tau_c - (p/e_sat)(e^h - 1); f(0+) > 0, f(h0) < 0,
  // strictly decreasing -> bisect.
  const auto f = [&](double h) {
    return (params.h0 - h) / params.tau_c -
           (p_in / params.e_sat) * std::expm1(h);
  };
  double lo = 0.0, hi = params.h0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) > 0.0)
      lo = mid;
    else
      hi = mid;
    if (hi - lo < 1e-15 * params.h0) break;
  }
  return 0.5 * (lo + hi);
}

namespace {

inline double gain_rate(const SOAParams& p, double h, double power) {
  return (p.h0 - h) / p.tau_c - (power / p.e_sat) * std::expm1(h);
}

// One RK4 pass over the window from h_start, storing h at each sample start
// and returning the state after the final step (= next window's start).
// Drive is total power per sample, interpolated linearly at half steps with
// periodic wrap. Integrator overshoot is clipped to the physical [0, h0].
double rk4_window(const SOAParams& p, const std::vector<double>& drive, double dt,
                  double h_start, std::vector<double>& h_out) {
  const std::size_t n = drive.size();
  h_out.resize(n);
  double h = h_start;
  for (std::size_t i = 0; i < n; ++i) {
    h_out[i] = h;
    const double p0 = drive[i];
    const double p1 = drive[(i + 1) % n];
    const double ph = 0.5 * (p0 + p1);
    const double k1 = gain_rate(p, h, p0);
    const double k2 = gain_rate(p, h + 0.5 * dt * k1, ph);
    const double k3 = gain_rate(p, h + 0.5 * dt * k2, ph);
    const double k4 = gain_rate(p, h + dt * k3, p1);
    h += dt / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    h = std::clamp(h, 0.0, p.h0);
  }
  return h;
}

}  // namespace

PropagateResult propagate(const SOAParams& params,
                          const std::vector<OpticalEnvelope>& inputs,
                          int warmup_cap) {
  params.validate();
  if (inputs.empty()) throw std::invalid_argument("propagate needs >= 1 input");
  const TimeGrid& grid = inputs.front().grid;
  for (const auto& e : inputs)
    if (!(e.grid == grid))
      throw std::invalid_argument("propagate inputs must share one grid");

  std::vector<double> drive(grid.n_samples, 0.0);
  for (const auto& e : inputs)
    for (std::size_t i = 0; i < grid.n_samples; ++i) drive[i] += e.power_at(i);

  double mean_drive = 0.0;
  for (double d : drive) mean_drive += d;
  mean_drive /= static_cast<double>(grid.n_samples);

  // Warm up from the mean-power fixed point until window-periodic.
  double h_start = steady_state_h(params, mean_drive);
  std::vector<double> h(grid.n_samples);
  double residual = 0.0;
  bool converged = false;
  int windows = 0;
  for (; windows < warmup_cap && !converged; ++windows) {
    const double h_end = rk4_window(params, drive, grid.dt, h_start, h);
    residual = std::abs(h_end - h_start);
    h_start = h_end;
    converged = residual < 1e-9 * params.h0;
  }
  if (!converged)
    throw ConvergenceError("SOA periodic steady state not reached after " +
                           std::to_string(warmup_cap) +
                           " windows; residual = " + std::to_string(residual));

  // one clean pass from the converged start yields the emitted window
  rk4_window(params, drive, grid.dt, h_start, h);

  PropagateResult result;
  result.trace.grid = grid;
  result.trace.h = h;
  result.warmup_windows = windows;
  result.outputs.reserve(inputs.size());
  for (const auto& e : inputs) {
    OpticalEnvelope out = e;
    for (std::size_t i = 0; i < grid.n_samples; ++i) {
      const std::complex<double> g =
          std::exp(std::complex<double>(0.5 * h[i], -0.5 * params.alpha * h[i]));
      out.samples[i] *= g;
    }
    result.outputs.push_back(std::move(out));
  }
  return result;
}

}  // namespace soamzi
