#include "doctest.h"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "soamzi/fft.hpp"
#include "soamzi/grid.hpp"
#include "soamzi/signalgen.hpp"
#include "soamzi/units.hpp"

using namespace soamzi;

TEST_CASE("time grid covers the common period of both frequencies") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  CHECK(g.window == doctest::Approx(1e-9).epsilon(1e-15));
  CHECK(g.dt == doctest::Approx(1e-9 / 32768.0).epsilon(1e-15));
  CHECK(g.n_samples == 32768);

  // equal frequencies: one period
  const TimeGrid same = make_time_grid(10e9, 10e9, 1024);
  CHECK(same.window == doctest::Approx(100e-12).epsilon(1e-15));

  // 10/3 ratio still closes in 1 ns
  const TimeGrid thirds = make_time_grid(10e9, 3e9, 32768);
  CHECK(thirds.window == doctest::Approx(1e-9).epsilon(1e-15));
}

TEST_CASE("time grid rejects bad arguments") {
  CHECK_THROWS_AS(make_time_grid(10e9, 1.0000001e9, 32768), std::invalid_argument);
  CHECK_THROWS_AS(make_time_grid(10e9, 1e9, 1000), std::invalid_argument);  // not 2^k
  CHECK_THROWS_AS(make_time_grid(0.0, 1e9, 1024), std::invalid_argument);
}

TEST_CASE("pulse train peak power matches the closed form") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const double mean = dbm_to_watt(-15.0);
  const OpticalEnvelope e = gaussian_pulse_train(g, 1.3e-12, mean, 1550.0);

  // Pp = mean * T_rep / (fwhm * sqrt(pi/(4 ln2))), frozen independently
  const double peak_expected = 2.28520116889329468e-3;
  double peak = 0.0;
  for (std::size_t i = 0; i < g.n_samples; ++i) peak = std::max(peak, e.power_at(i));
  CHECK(peak == doctest::Approx(peak_expected).epsilon(1e-9));

  CHECK(e.mean_power() == doctest::Approx(mean).epsilon(1e-9));
  CHECK(e.carrier_nm == 1550.0);
}

TEST_CASE("pulse train mean power is grid-independent") {
  const double mean = dbm_to_watt(-15.0);
  const OpticalEnvelope a =
      gaussian_pulse_train(make_time_grid(10e9, 1e9, 32768), 1.3e-12, mean, 1550.0);
  const OpticalEnvelope b =
      gaussian_pulse_train(make_time_grid(10e9, 1e9, 65536), 1.3e-12, mean, 1550.0);
  CHECK(a.mean_power() == doctest::Approx(b.mean_power()).epsilon(1e-9));
}

TEST_CASE("pulse train degenerates toward CW as fwhm approaches the period") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const OpticalEnvelope e = gaussian_pulse_train(g, 100e-12, 1e-3, 1550.0);
  double mx = 0.0, mn = 1e300;
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    mx = std::max(mx, e.power_at(i));
    mn = std::min(mn, e.power_at(i));
  }
  CHECK(mx / e.mean_power() < 1.2);  // peak/mean -> 1
  CHECK(mx / mn < 1.5);
  CHECK(e.mean_power() == doctest::Approx(1e-3).epsilon(1e-9));
}

TEST_CASE("pulse train rejects a grid coarser than fwhm/16") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 256);  // dt = 3.9 ps
  CHECK_THROWS_AS(gaussian_pulse_train(g, 1.3e-12, 1e-3, 1550.0),
                  std::invalid_argument);
}

TEST_CASE("mzm modulation depth maps onto the power envelope") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const double p0 = 100e-6;

  const OpticalEnvelope flat = mzm_modulated_cw(g, 1557.4, p0, 0.0, 1e9);
  for (std::size_t i = 0; i < g.n_samples; i += 999)
    CHECK(flat.power_at(i) == doctest::Approx(p0).epsilon(1e-12));

  const OpticalEnvelope half = mzm_modulated_cw(g, 1557.4, p0, 0.5, 1e9);
  double mx = 0.0, mn = 1e300, acc = 0.0;
  for (std::size_t i = 0; i < g.n_samples; ++i) {
    mx = std::max(mx, half.power_at(i));
    mn = std::min(mn, half.power_at(i));
    acc += half.power_at(i);
  }
  CHECK(mx == doctest::Approx(1.5 * p0).epsilon(1e-12));
  CHECK(mn == doctest::Approx(0.5 * p0).epsilon(1e-12));
  CHECK(acc / static_cast<double>(g.n_samples) == doctest::Approx(p0).epsilon(1e-12));

  const OpticalEnvelope full = mzm_modulated_cw(g, 1557.4, p0, 1.0, 1e9);
  mn = 1e300;
  for (std::size_t i = 0; i < g.n_samples; ++i) mn = std::min(mn, full.power_at(i));
  CHECK(mn < 1e-12 * p0);  // touches zero at the trough
}

TEST_CASE("mzm rejects over- and under-modulation") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 1024);
  CHECK_THROWS_AS(mzm_modulated_cw(g, 1557.4, 1e-3, 1.01, 1e9), std::invalid_argument);
  CHECK_THROWS_AS(mzm_modulated_cw(g, 1557.4, 1e-3, -0.1, 1e9), std::invalid_argument);
}

TEST_CASE("cw equals a depth-zero mzm") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 1024);
  const OpticalEnvelope a = cw(g, 1557.4, 1e-3);
  const OpticalEnvelope b = mzm_modulated_cw(g, 1557.4, 1e-3, 0.0, 1e9);
  for (std::size_t i = 0; i < g.n_samples; ++i)
    CHECK(std::abs(a.samples[i] - b.samples[i]) < 1e-15);
  const OpticalEnvelope z = cw(g, 1557.4, 0.0);
  CHECK(z.is_zero());
}

// DFT of |E|^2 must live only on multiples of gcd(f_rep, f_if).
static double off_comb_worst_dbc(const OpticalEnvelope& e, double gcd_hz) {
  std::vector<std::complex<double>> p(e.grid.n_samples);
  for (std::size_t i = 0; i < e.grid.n_samples; ++i) p[i] = e.power_at(i);
  auto spec = fft(p);
  const double df = e.grid.bin_spacing();
  const std::size_t stride = static_cast<std::size_t>(std::round(gcd_hz / df));
  double peak = 0.0, worst_off = 0.0;
  for (std::size_t k = 0; k < spec.size(); ++k) {
    const double mag = std::abs(spec[k]);
    if (k % stride == 0)
      peak = std::max(peak, mag);
    else
      worst_off = std::max(worst_off, mag);
  }
  return 20.0 * std::log10(worst_off / peak);
}

TEST_CASE("generated envelopes are commensurate with the grid") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  CHECK(off_comb_worst_dbc(gaussian_pulse_train(g, 1.3e-12, 1e-3, 1550.0), 1e9) <
        -200.0);
  CHECK(off_comb_worst_dbc(mzm_modulated_cw(g, 1557.4, 1e-3, 0.8, 1e9), 1e9) < -200.0);
}

TEST_CASE("pulse train comb lines match the analytic Fourier coefficients") {
  const TimeGrid g = make_time_grid(10e9, 1e9, 32768);
  const double mean = 1e-3;
  const double fwhm = 1.3e-12;
  const OpticalEnvelope e = gaussian_pulse_train(g, fwhm, mean, 1550.0);

  std::vector<std::complex<double>> p(g.n_samples);
  for (std::size_t i = 0; i < g.n_samples; ++i) p[i] = e.power_at(i);
  auto spec = fft(p);
  const double df = g.bin_spacing();
  for (int n = 0; n <= 4; ++n) {
    const std::size_t k = static_cast<std::size_t>(std::round(n * 10e9 / df));
    const double measured = std::abs(spec[k]) / static_cast<double>(g.n_samples);
    const double analytic = pulse_train_comb_coefficient(mean, 10e9, fwhm, n);
    CHECK(std::abs(10.0 * std::log10(measured / analytic)) < 0.01);
  }
}

TEST_CASE("fft round trip and a known transform") {
  std::vector<std::complex<double>> x(8);
  for (std::size_t i = 0; i < 8; ++i) x[i] = {static_cast<double>(i), -0.5 * i};
  const auto back = ifft(fft(x));
  for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(back[i] - x[i]) < 1e-12);

  // single tone lands in a single bin
  std::vector<double> tone(16);
  for (std::size_t i = 0; i < 16; ++i) tone[i] = std::cos(2.0 * M_PI * 3.0 * i / 16.0);
  const auto spec = fft_real(tone);
  CHECK(std::abs(spec[3]) == doctest::Approx(8.0).epsilon(1e-12));
  CHECK(std::abs(spec[2]) < 1e-12);
}
