#include "soamzi/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace soamzi {

namespace {

// Best rational p/q ~= r with q <= q_max (continued fractions).
std::pair<std::int64_t, std::int64_t> rational_approx(double r, std::int64_t q_max) {
  std::int64_t p_prev = 1, q_prev = 0;
  std::int64_t p_cur = static_cast<std::int64_t>(std::floor(r));
  std::int64_t q_cur = 1;
  double frac = r - std::floor(r);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const std::int64_t a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - std::floor(inv);
    const std::int64_t p_next = a * p_cur + p_prev;
    const std::int64_t q_next = a * q_cur + q_prev;
    if (q_next > q_max) break;
    p_prev = p_cur;
    q_prev = q_cur;
    p_cur = p_next;
    q_cur = q_next;
  }
  return {p_cur, q_cur};
}

}  // namespace

TimeGrid make_time_grid(double f_rep, double f_if, std::size_t n_samples) {
  if (!(f_rep > 0.0) || !(f_if > 0.0))
    throw std::invalid_argument("time grid frequencies must be positive");
  if (n_samples == 0 || (n_samples & (n_samples - 1)) != 0)
    throw std::invalid_argument("n_samples must be a power of two");

  const auto [p, q] = rational_approx(f_rep / f_if, 64);
  if (q == 0 || std::abs(f_rep / f_if - static_cast<double>(p) / static_cast<double>(q)) >
                    1e-9 * (f_rep / f_if))
    throw std::invalid_argument(
        "f_rep/f_if = " + std::to_string(f_rep / f_if) +
        " has no rational approximation with denominator <= 64; "
        "choose commensurate frequencies");

  // With f_rep/f_if = p/q in lowest terms, the smallest common period holds
  // p repetition periods and q signal periods: window = p/f_rep = q/f_if.
  const double window = static_cast<double>(p) / f_rep;
  TimeGrid grid;
  grid.n_samples = n_samples;
  grid.window = window;
  grid.dt = window / static_cast<double>(n_samples);
  grid.f_rep = f_rep;
  grid.f_if = f_if;
  return grid;
}

double OpticalEnvelope::mean_power() const {
  if (samples.empty()) return 0.0;
  double acc = 0.0;
  for (const auto& s : samples) acc += std::norm(s);
  return acc / static_cast<double>(samples.size());
}

bool OpticalEnvelope::is_zero() const {
  return std::all_of(samples.begin(), samples.end(),
                     [](const std::complex<double>& s) { return s == 0.0; });
}

double ElectricalWaveform::mean() const {
  if (samples.empty()) return 0.0;
  return std::accumulate(samples.begin(), samples.end(), 0.0) /
         static_cast<double>(samples.size());
}

double ElectricalWaveform::max() const {
  return *std::max_element(samples.begin(), samples.end());
}

OpticalEnvelope zero_envelope(const TimeGrid& grid, double carrier_nm) {
  OpticalEnvelope e;
  e.grid = grid;
  e.samples.assign(grid.n_samples, std::complex<double>(0.0, 0.0));
  e.carrier_nm = carrier_nm;
  return e;
}

}  // namespace soamzi
